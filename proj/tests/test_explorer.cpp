#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "core/explorer.hpp"
#include "core/lambert.hpp"

using lamw::CellStatus;
using lamw::classify_point;
using lamw::GridCell;
using lamw::GridSpec;
using lamw::sweep;
using lamw::to_csv;
using lamw::to_string;

namespace {

using Complex = std::complex<double>;

GridSpec box(double re_min, double re_max, double im_min, double im_max,
             std::size_t nx, std::size_t ny) {
  GridSpec spec;
  spec.re_min = re_min;
  spec.re_max = re_max;
  spec.im_min = im_min;
  spec.im_max = im_max;
  spec.nx = nx;
  spec.ny = ny;
  return spec;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    out.push_back(line);
  }
  return out;
}

std::size_t count_commas(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) {
    n += (c == ',');
  }
  return n;
}

}  // namespace

TEST_CASE("classify_point on agreeing points") {
  for (Complex x : {Complex{1.0, 0.0}, Complex{0.2, 0.0}, Complex{0.5, 0.5}}) {
    CAPTURE(x.real());
    CAPTURE(x.imag());
    const GridCell cell = classify_point(x, 1e-8, 1e-6);
    CHECK(cell.status == CellStatus::valid);
    CHECK(cell.x == x);
    REQUIRE(cell.w_int.has_value());
    REQUIRE(cell.w_ref.has_value());
    REQUIRE(cell.abs_err.has_value());
    CHECK(*cell.abs_err == std::abs(*cell.w_int - *cell.w_ref));
    CHECK(*cell.abs_err <= std::max(1e-8, 1e-6 * std::abs(*cell.w_ref)));
  }
}

TEST_CASE("classify_point flags singular samples") {
  const GridCell cell = classify_point(Complex{-1.0, 0.0}, 1e-8, 1e-6);
  CHECK(cell.status == CellStatus::integral_singular);
  CHECK_FALSE(cell.w_int.has_value());
  CHECK_FALSE(cell.abs_err.has_value());
  // halley also rejects the ray, so no reference either
  CHECK_FALSE(cell.w_ref.has_value());
}

TEST_CASE("classify_point validates thresholds") {
  CHECK_THROWS_AS(classify_point(Complex{1.0, 0.0}, 0.0, 1e-6),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_point(Complex{1.0, 0.0}, 1e-8, -1.0),
                  std::invalid_argument);
}

TEST_CASE("sweep layout is row major with exact corners") {
  const std::vector<GridCell> cells = sweep(box(-1.0, 2.0, -0.5, 0.5, 2, 2));
  REQUIRE(cells.size() == 4);
  CHECK(cells[0].x == Complex{-1.0, -0.5});
  CHECK(cells[1].x == Complex{2.0, -0.5});
  CHECK(cells[2].x == Complex{-1.0, 0.5});
  CHECK(cells[3].x == Complex{2.0, 0.5});
}

TEST_CASE("sweep validates its spec") {
  CHECK_THROWS_AS(sweep(box(2.0, 0.1, -0.5, 0.5, 3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep(box(0.1, 0.1, -0.5, 0.5, 3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep(box(0.1, 2.0, 0.5, -0.5, 3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep(box(0.1, 2.0, -0.5, 0.5, 1, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep(box(0.1, 2.0, -0.5, 0.5, 3, 0)),
                  std::invalid_argument);
  GridSpec nan_spec = box(0.1, 2.0, -0.5, 0.5, 3, 3);
  nan_spec.re_min = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sweep(nan_spec), std::invalid_argument);
}

TEST_CASE("well-conditioned box is fully valid") {
  const std::vector<GridCell> cells = sweep(box(0.1, 2.0, -0.5, 0.5, 5, 5));
  REQUIRE(cells.size() == 25);
  for (const GridCell& cell : cells) {
    CAPTURE(cell.x.real());
    CAPTURE(cell.x.imag());
    CHECK(cell.status == CellStatus::valid);
    REQUIRE(cell.w_int.has_value());
    // the integral value satisfies the defining equation on its own
    const Complex w = *cell.w_int;
    const double resid = std::abs(w * std::exp(w) - cell.x);
    CHECK(resid <= 10.0 * std::max(1e-8, 1e-6 * std::abs(cell.x)));
  }
}

TEST_CASE("real ray left of the branch point is singular") {
  // rows at im = -0.01, 0, 0.01; middle row samples the cut
  const std::vector<GridCell> cells = sweep(box(-2.0, -0.5, -0.01, 0.01, 4, 3));
  REQUIRE(cells.size() == 12);
  for (std::size_t i = 4; i < 8; ++i) {
    CAPTURE(i);
    CHECK(cells[i].x.imag() == 0.0);
    CHECK(cells[i].status == CellStatus::integral_singular);
  }
}

TEST_CASE("status is conjugate symmetric") {
  for (Complex x : {Complex{0.5, 0.5}, Complex{-1.0, 0.01}, Complex{-1.0, 1.0},
                    Complex{2.0, 2.0}, Complex{0.1, -0.7},
                    Complex{-0.5, 0.001}}) {
    CAPTURE(x.real());
    CAPTURE(x.imag());
    const GridCell up = classify_point(x, 1e-8, 1e-6);
    const GridCell down = classify_point(std::conj(x), 1e-8, 1e-6);
    CHECK(up.status == down.status);
  }
}

TEST_CASE("small disk is inside the empirical region") {
  for (Complex x : {Complex{0.3, 0.0}, Complex{-0.2, 0.1}, Complex{0.0, 0.3},
                    Complex{0.2, -0.2}, Complex{-0.15, -0.15}}) {
    CAPTURE(x.real());
    CAPTURE(x.imag());
    CHECK(classify_point(x, 1e-8, 1e-6).status == CellStatus::valid);
  }
}

TEST_CASE("sweep and csv are deterministic") {
  const GridSpec spec = box(-1.0, 1.5, -1.0, 1.0, 6, 5);
  const std::string a = to_csv(sweep(spec));
  const std::string b = to_csv(sweep(spec));
  CHECK(a == b);
}

TEST_CASE("csv format") {
  const std::string header =
      "re,im,w_int_re,w_int_im,w_ref_re,w_ref_im,abs_err,status\n";
  CHECK(to_csv({}) == header);

  const std::vector<GridCell> cells = sweep(box(-1.0, 1.0, -0.5, 0.5, 3, 3));
  const std::string csv = to_csv(cells);
  CHECK(csv.substr(0, header.size()) == header);
  CHECK(csv.back() == '\n');

  const std::vector<std::string> lines = lines_of(csv);
  REQUIRE(lines.size() == 1 + cells.size());
  for (const std::string& line : lines) {
    CHECK(count_commas(line) == 7);
  }

  // cell 4 is x = 0: valid, all fields populated
  CHECK(lines[1 + 4].find("valid") != std::string::npos);
  // cell 3 is x = -1 on the cut: empty numeric fields
  CHECK(lines[1 + 3] == "-1,0,,,,,," + std::string("integral_singular"));
}

TEST_CASE("status names") {
  CHECK(to_string(CellStatus::valid) == std::string("valid"));
  CHECK(to_string(CellStatus::mismatch) == std::string("mismatch"));
  CHECK(to_string(CellStatus::integral_singular) ==
        std::string("integral_singular"));
  CHECK(to_string(CellStatus::integral_no_converge) ==
        std::string("integral_no_converge"));
  CHECK(to_string(CellStatus::oracle_fail) == std::string("oracle_fail"));
}

TEST_CASE("cells carry consistent optionals") {
  for (const GridCell& cell : sweep(box(-2.0, 2.0, -1.0, 1.0, 7, 5))) {
    CAPTURE(cell.x.real());
    CAPTURE(cell.x.imag());
    if (cell.status == CellStatus::valid ||
        cell.status == CellStatus::mismatch) {
      CHECK(cell.w_int.has_value());
      CHECK(cell.w_ref.has_value());
      CHECK(cell.abs_err.has_value());
    }
    if (cell.abs_err.has_value()) {
      CHECK(cell.w_int.has_value());
      CHECK(cell.w_ref.has_value());
    }
    if (cell.status == CellStatus::integral_singular ||
        cell.status == CellStatus::integral_no_converge) {
      CHECK_FALSE(cell.w_int.has_value());
    }
    if (cell.status == CellStatus::oracle_fail) {
      CHECK_FALSE(cell.w_ref.has_value());
    }
  }
}
