#include <doctest.h>

#include "nefcert/config.hpp"
#include "nefcert/error.hpp"

using namespace nefcert;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInternalInconsistency;
}

const IntMatrix kC3 = IntMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
const IntMatrix kC4 = IntMatrix::from_columns({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}, 4);

}  // namespace

TEST_CASE("as_configuration witnesses") {
  CHECK(as_configuration(IntMatrix::identity(2)).witness() == RatVector{1, 1});
  CHECK(as_configuration(kC3).witness() == RatVector{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(code_of([] { as_configuration(IntMatrix::from_rows({{1, 2}})); }) == ErrorCode::kNotAConfiguration);
  CHECK(code_of([] { as_configuration(IntMatrix::from_rows({{1, 1}, {0, 0}})); }) == ErrorCode::kRepeatedColumns);
  CHECK(has_repeated_columns(IntMatrix::from_rows({{1, 1}, {2, 2}})));
  CHECK_FALSE(has_repeated_columns(kC3));
}

TEST_CASE("centrally symmetric configuration") {
  auto cs = centrally_symmetric(as_configuration(IntMatrix::identity(2)));
  CHECK(cs.full == IntMatrix::from_columns({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, 1}}, 3));
  CHECK(cs.variable_names() == std::vector<std::string>{"x1", "x2", "y1", "y2", "z"});
  CHECK(cs.x(2) == 1);
  CHECK(cs.y(1) == 2);
  CHECK(cs.z() == 4);

  auto one = centrally_symmetric(as_configuration(IntMatrix::from_rows({{1}})));
  CHECK(one.full == IntMatrix::from_rows({{1, -1, 0}, {1, 1, 1}}));

  auto c4 = centrally_symmetric(as_configuration(kC4));
  CHECK(c4.full.rows() == 5);
  CHECK(c4.full.cols() == 9);
  // A_{C4} has rank 3 in 4 rows; only the row-reduced matrix is unimodular
  CHECK_FALSE(is_unimodular(c4.base.matrix()));
  CHECK(maximal_minor_profile(c4.base.matrix()) == std::vector<Int>(4, Int(1)));
  const std::size_t keep[] = {0, 1, 2};
  CHECK(is_unimodular(kC4.select_rows(keep)));
}

TEST_CASE("append_origin and homogenize") {
  CHECK(append_origin(as_configuration(IntMatrix::identity(2))) == IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
  const IntMatrix c3o = append_origin(as_configuration(kC3));
  CHECK(c3o.rows() == 3);
  CHECK(c3o.cols() == 4);
  CHECK(c3o.column(3) == IntVector(3, Int(0)));

  CHECK(homogenize({{0}, {1}}) == IntMatrix::from_rows({{0, 1}, {1, 1}}));
  const IntMatrix tri = homogenize({{0, 0}, {1, 0}, {0, 1}});
  CHECK(tri.rows() == 3);
  CHECK(abs(determinant(tri)) == 1);
  CHECK(code_of([] { homogenize({}); }) == ErrorCode::kEmptyInput);
}
