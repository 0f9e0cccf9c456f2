#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/exp.hpp"

using namespace hoco;

TEST_CASE("function space out of a point recovers the target") {
  auto st = standard(2);
  auto Y = restrict_subcomplex(boundary_sub(st)).set;
  auto E = bounded_exponential(point_sset(), Y, 3);
  CHECK(validate(*E.set).ok);
  for (int d = 0; d <= 3; ++d)
    CHECK(E.set->size(d) == (d <= Y->top_dim() ? Y->size(d) : 0));
}

TEST_CASE("function space of the interval in itself") {
  auto I = standard(1).set;
  auto E = bounded_exponential(I, I, 2);
  CHECK(validate(*E.set).ok);
  // monotone self maps of [1]
  CHECK(E.set->size(0) == 3);
  // monotone maps [1]x[1] -> [1], then the grid [2]x[1]
  CHECK(E.set->simplices(1).size() == 6);
  CHECK(E.set->size(1) == 3);
  CHECK(E.set->simplices(2).size() == 10);
}

TEST_CASE("operator action on function cells matches precomposition") {
  auto I = standard(1).set;
  auto E = bounded_exponential(I, I, 2);
  for (auto& s : E.set->simplices(1)) {
    // both faces of an edge of maps are the evaluation endpoints
    SMap m = E.cells_[static_cast<size_t>(s.cell.dim)][static_cast<size_t>(s.cell.idx)];
    for (int j = 0; j <= 1; ++j) {
      EZ f = E.set->act(s, op_delta(1, j));
      SMap w = E.whisker(m, s.cell.dim, compose(s.epi, op_delta(1, j)));
      CHECK(E.classify(w, 0) == f);
    }
  }
}
