#include <random>

#include "doctest.h"
#include "hallmod/quiver.hpp"

using namespace hallmod;

namespace {

Quiver a2_swap(Duality kind, int q) { return type_a(2, kind, q); }

}  // namespace

TEST_CASE("validation") {
  Quiver sw = parse_quiver(
      "duality orthogonal\nq 3\nnode 1 s=+1\nnode 2 s=+1\narrow a 1 2 tau=-1\nsigma node 1 2\n");
  CHECK(validate(sw).empty());
  CHECK(validate(jordan(Duality::Symplectic, 3)).empty());
  Quiver bad = parse_quiver(
      "duality orthogonal\nq 3\nnode 1\nnode 2\narrow a 1 2\narrow b 1 2\nsigma arrow a b\n");
  CHECK(!validate(bad).empty());
  Quiver unit = a2_swap(Duality::Unitary, 3);
  CHECK(!validate(unit).empty());
  CHECK(validate(a2_swap(Duality::Unitary, 9)).empty());
  Quiver tau_bad = sw;
  tau_bad.s = {1, -1};
  CHECK(!validate(tau_bad).empty());
  for (int n = 1; n <= 5; ++n)
    for (const Quiver& Q : type_a_orientations(n, Duality::Orthogonal, 3)) {
      CHECK(validate(Q).empty());
      CHECK(type_a_positions(Q).size() == static_cast<std::size_t>(n));
    }
  CHECK(type_a_orientations(3, Duality::Orthogonal, 3).size() == 2);
  CHECK(validate(disjoint_double(type_a(2, Duality::Orthogonal, 3), Duality::Symplectic)).empty());
}

TEST_CASE("config parsing") {
  CHECK_THROWS_AS(parse_quiver("q 3\nnode 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("duality orthogonal\nq x\nnode 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("duality orthogonal\nq 3\nnode 1\narrow a 1 7\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("duality weird\nq 3\nnode 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("duality orthogonal\nq 3\nnode 1 s=2\n"), ParseError);
  Quiver Q = type_a(3, Duality::Symplectic, 5, {true});
  Quiver R = parse_quiver(quiver_to_config(Q));
  CHECK(R.node_ids == Q.node_ids);
  CHECK(R.s == Q.s);
  CHECK(R.sigma_node == Q.sigma_node);
  CHECK(R.sigma_arrow == Q.sigma_arrow);
  CHECK(R.q == 5);
  for (int a = 0; a < Q.num_arrows(); ++a) {
    CHECK(R.arrows[a].tail == Q.arrows[a].tail);
    CHECK(R.arrows[a].head == Q.arrows[a].head);
  }
}

TEST_CASE("euler and cartan forms") {
  Quiver A2 = parse_quiver("duality orthogonal\nq 3\nnode 1\nnode 2\narrow a 1 2\nsigma node 1 2\n");
  CHECK(euler_form(A2, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(A2, {0, 1}, {1, 0}) == 0);
  CHECK(euler_form(A2, {1, 0}, {1, 0}) == 1);
  CHECK(cartan_form(A2, {1, 0}, {0, 1}) == -1);
  CHECK(cartan_form(A2, {1, 0}, {1, 0}) == 2);
  Quiver J = jordan(Duality::Symplectic, 3);
  CHECK(euler_form(J, {1}, {1}) == 0);
  CHECK(cartan_form(J, {1}, {1}) == 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(0, 4);
  Quiver A4 = type_a(4, Duality::Orthogonal, 3, {true});
  for (int rep = 0; rep < 100; ++rep) {
    DimVec a(4), b(4), c(4);
    for (int i = 0; i < 4; ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
      c[i] = dist(rng);
    }
    CHECK(euler_form(A4, dim_add(a, b), c) == euler_form(A4, a, c) + euler_form(A4, b, c));
    CHECK(euler_form(A4, c, dim_add(a, b)) == euler_form(A4, c, a) + euler_form(A4, c, b));
  }
}

TEST_CASE("twist function") {
  CHECK(e_twist2(single_node(Duality::Orthogonal, 3), {1}) == 0);
  CHECK(e_twist2(single_node(Duality::Symplectic, 3), {1}) == 2);
  Quiver D = disjoint_double(type_a(1, Duality::Orthogonal, 3), Duality::Orthogonal);
  CHECK(e_twist2(D, {1, 0}) == 0);
  CHECK(e_twist2(D, {0, 1}) == 0);
  CHECK(e_twist2(jordan(Duality::Symplectic, 3), {3}) == 0);
  CHECK(e_twist2(single_node(Duality::Unitary, 9), {1}) == 1);
  CHECK(t_weight2(single_node(Duality::Orthogonal, 3), {0}, 0) == 0);
  CHECK(t_weight2(single_node(Duality::Symplectic, 3), {0}, 0) == -4);
  CHECK(t_weight2(single_node(Duality::Symplectic, 3), {2}, 0) == -12);
  std::vector<Quiver> qs = type_a_orientations(4, Duality::Symplectic, 3);
  for (const auto& Q : type_a_orientations(5, Duality::Orthogonal, 3)) qs.push_back(Q);
  qs.push_back(disjoint_double(type_a(3, Duality::Orthogonal, 3, {true}), Duality::Symplectic));
  for (const Quiver& Q : qs)
    for (const DimVec& d : dims_below(DimVec(Q.num_nodes(), 2))) {
      CHECK(e_twist2(Q, d) == e_twist2_alternate(Q, d));
      CHECK(e_twist2(Q, d) % 2 == 0);
      if (Q.is_symmetric(d))
        for (int i = 0; i < Q.num_nodes(); ++i) CHECK(t_weight2(Q, d, i) == t_weight2(Q, d, Q.sigma_node[i]));
    }
}
