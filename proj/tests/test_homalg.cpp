#include <doctest.h>

#include "support.hpp"

using namespace qtilt;
using namespace qtest;

namespace {

void check_resolution_shape(const Resolution& r) {
  for (std::size_t k = 0; k + 1 < r.maps.size(); ++k) {
    if (r.kind == Resolution::Kind::projective)
      CHECK(compose(r.maps[k], r.maps[k + 1]).is_zero());
    else
      CHECK(compose(r.maps[k + 1], r.maps[k]).is_zero());
  }
  for (std::size_t k = 1; k < r.maps.size(); ++k) {
    if (r.kind == Resolution::Kind::projective) {
      // Minimality: the image lies in the radical of the target.
      auto rad = radical(r.maps[k].target);
      auto img = image(r.maps[k]);
      for (int v = 0; v < r.maps[k].target.algebra()->num_vertices(); ++v)
        CHECK(rank(hstack(rad.inclusion.comps[v], img.inclusion.comps[v])) == rank(rad.inclusion.comps[v]));
    }
  }
}

}  // namespace

TEST_SUITE("homalg") {

TEST_CASE("projective resolutions") {
  auto a = family("radsquare_a:2");
  auto p = projective(a, 0);
  auto r0 = min_proj_resolution(p, 3);
  CHECK(r0.finite);
  CHECK(r0.length() == 0);
  CHECK(syzygy(p, 1).is_zero());
  auto r = min_proj_resolution(simple(a, 0), 5);
  REQUIRE(r.term_vertices.size() == 3);
  CHECK(r.term_vertices[0] == std::vector<int>{0});
  CHECK(r.term_vertices[1] == std::vector<int>{1});
  CHECK(r.term_vertices[2] == std::vector<int>{2});
  CHECK(proj_dim(simple(a, 0), 5) == BoundedDim{2, false});
  check_resolution_shape(r);
  auto k = ka2();
  CHECK(is_isomorphic(syzygy(simple(k, 0), 1), simple(k, 1)));
}

TEST_CASE("injective coresolutions") {
  auto a = family("radsquare_a:2");
  auto r = min_inj_coresolution(regular_module(a), 5);
  REQUIRE(r.term_vertices.size() == 3);
  auto t0 = r.term_vertices[0];
  std::sort(t0.begin(), t0.end());
  CHECK(t0 == std::vector<int>{1, 2, 2});
  CHECK(r.term_vertices[1] == std::vector<int>{1});
  CHECK(r.term_vertices[2] == std::vector<int>{0});
  CHECK(is_isomorphic(cosyzygy(regular_module(a), 1), simple(a, 1)));
  CHECK(is_isomorphic(cosyzygy(regular_module(a), 2), simple(a, 0)));
  check_resolution_shape(r);
  CHECK(inj_dim(injective(a, 0), 3) == BoundedDim{0, false});
  CHECK(cosyzygy(injective(a, 1), 1).is_zero());
  auto d = dual_numbers();
  auto rd = min_inj_coresolution(regular_module(d), 3);
  CHECK(rd.term_vertices[0] == std::vector<int>{0});
  CHECK(cosyzygy(regular_module(d), 1).is_zero());
}

TEST_CASE("dimension bounds") {
  auto d = dual_numbers();
  for (int b : {1, 3, 6}) {
    auto pd = proj_dim(simple(d, 0), b);
    CHECK(pd.at_least);
    CHECK(pd.value == b + 1);
    CHECK(pd.str() == ">=" + std::to_string(b + 1));
  }
  for (int n = 1; n <= 4; ++n) {
    auto a = family("radsquare_a:" + std::to_string(n));
    int gl = 0;
    for (int v = 0; v < a->num_vertices(); ++v) gl = std::max(gl, proj_dim(simple(a, v), n + 2).value);
    CHECK(gl == n);
  }
}

TEST_CASE("Ext") {
  auto k = ka2();
  CHECK(ext_dim(simple(k, 0), simple(k, 1), 1) == 1);
  CHECK(ext_dim(simple(k, 1), simple(k, 0), 1) == 0);
  std::mt19937_64 gen(8);
  for (const char* f : {"radsquare_a:3", "auslander_uniserial:3", "preprojective_a:2"}) {
    auto a = family(f);
    for (int t = 0; t < 6; ++t) {
      auto m = random_module(a, gen), n = random_module(a, gen);
      for (int v = 0; v < a->num_vertices(); ++v) CHECK(ext_dim(projective(a, v), n, 1) == 0);
      for (int i = 1; i <= 2; ++i) CHECK(ext_dim(m, n, i) == ext_dim_injective(m, n, i));
    }
  }
}

TEST_CASE("Ext on the tilting modules of KA3 vanishes") {
  auto a = family("nakayama_a:3");
  for (const auto& ivs : std::vector<std::vector<Interval>>{{{1, 1}, {1, 2}, {1, 3}},
                                                            {{2, 2}, {1, 2}, {1, 3}},
                                                            {{1, 1}, {3, 3}, {1, 3}},
                                                            {{2, 2}, {2, 3}, {1, 3}},
                                                            {{3, 3}, {2, 3}, {1, 3}}}) {
    std::vector<Representation> parts;
    for (auto iv : ivs) parts.push_back(interval_module(a, iv));
    auto t = direct_sum_module(parts);
    CHECK(ext_dim(t, t, 1) == 0);
  }
}

TEST_CASE("Ext agrees with the Euler form on KA_n") {
  for (int n = 2; n <= 4; ++n) {
    auto a = family("nakayama_a:" + std::to_string(n));
    for (auto x : intervals(n))
      for (auto y : intervals(n)) {
        auto mx = interval_module(a, x), my = interval_module(a, y);
        CHECK(hom_dim(mx, my) == interval_hom(x, y));
        CHECK(ext_dim(mx, my, 1) == interval_ext(n, x, y));
        CHECK(ext_dim(mx, my, 2) == 0);
      }
  }
}

TEST_CASE("transpose and AR translates") {
  auto k = ka2();
  for (int v = 0; v < 2; ++v) CHECK(tau(projective(k, v)).is_zero());
  CHECK(is_isomorphic(tau(simple(k, 0)), simple(k, 1)));
  CHECK(is_isomorphic(tau_inverse(simple(k, 1)), simple(k, 0)));
  auto a = family("auslander_uniserial:3");
  for (int v = 0; v < a->num_vertices(); ++v) {
    CHECK(tau(projective(a, v)).is_zero());
    CHECK(tau_inverse(injective(a, v)).is_zero());
  }
  // AR duality on KA3 over random modules.
  std::mt19937_64 gen(12);
  auto k3 = family("nakayama_a:3");
  for (int t = 0; t < 25; ++t) {
    auto m = random_module(k3, gen), n = random_module(k3, gen);
    CHECK(ext_dim(m, n, 1) == stable_hom_injective_dim(n, tau(m)));
  }
}

TEST_CASE("AR sequences of KA_n hit the expected intervals") {
  // tau M[i,j] = M[i-1,j-1] for non-projective intervals (arrows i+1 -> i).
  for (int n = 2; n <= 4; ++n) {
    auto a = family("nakayama_a:" + std::to_string(n));
    for (auto x : intervals(n)) {
      auto t = tau(interval_module(a, x));
      if (x.lo == 1) {
        CHECK(t.is_zero());
      } else {
        CHECK(is_isomorphic(t, interval_module(a, {x.lo - 1, x.hi - 1})));
      }
    }
  }
}

}
