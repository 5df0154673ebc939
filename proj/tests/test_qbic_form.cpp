#include <doctest.h>

#include <random>

#include "qbic/qbic_form.hpp"
#include "qbic/subspace.hpp"

using namespace qbic;

namespace {

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng() % f.order();
    if (m.inverse()) return m;
  }
}

// Hermitian by the definition: beta(u^[1], v) = beta(v^[1], u)^q for all u.
// Both sides are additive in u and scale by c^q, so a basis check suffices.
bool hermitian_by_definition(const QBicForm& form, const Vec& v) {
  const Field& f = form.field();
  const std::size_t n = form.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(n, 0);
    u[i] = f.one();
    if (form.evaluate(u, v) != f.pow(form.evaluate(v, u), form.q())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("evaluate on the Fermat form") {
  Field f4(2, 2);
  QBicForm fermat = QBicForm::fermat(f4, 2, 3);
  Fe w = f4.from_digits({0, 1});

  Vec e0{1, 0, 0};
  CHECK(fermat.evaluate(e0, e0) == 1);

  Vec v{1, w, 0};
  CHECK(fermat.evaluate(v, v) == 0);  // 1 + w^3 = 0: an isotropic vector

  CHECK_THROWS_AS(fermat.evaluate({1, 0}, e0), DimensionMismatchError);
}

TEST_CASE("evaluate on a Jordan block") {
  Field f4(2, 2);
  QBicForm n2 = QBicForm::from_type(f4, 2, FormType{0, {{2, 1}}});
  CHECK(n2.gram().at(0, 1) == 1);
  CHECK(n2.gram().at(0, 0) == 0);
  CHECK(n2.evaluate({1, 0}, {0, 1}) == 1);
  CHECK(n2.evaluate({0, 1}, {1, 0}) == 0);
}

TEST_CASE("restriction") {
  Field f4(2, 2);
  Fe w = f4.from_digits({0, 1});

  QBicForm fermat3 = QBicForm::fermat(f4, 2, 3);
  Subspace full = Subspace::full(f4, 3);
  CHECK(fermat3.restrict_to(full).gram() == fermat3.gram());

  QBicForm fermat4 = QBicForm::fermat(f4, 2, 4);
  Subspace plane = Subspace::span_of(f4, {{1, w, 0, 0}, {0, 0, 1, w}});
  QBicForm restr = fermat4.restrict_to(plane);
  CHECK(restr.is_zero_form());
  CHECK(is_isotropic(fermat4, plane));

  Subspace coord = Subspace::span_of(f4, {{1, 0, 0}, {0, 1, 0}});
  CHECK(fermat3.restrict_to(coord).gram() == Matrix::identity(f4, 2));
}

TEST_CASE("kernels and radical") {
  Field f4(2, 2);

  QBicForm fermat = QBicForm::fermat(f4, 2, 3);
  FormProfile kp = fermat.kernels();
  CHECK(kp.rank == 3);
  CHECK(kp.corank == 0);
  CHECK(kp.radical_dim == 0);

  QBicForm n2 = QBicForm::from_type(f4, 2, FormType{0, {{2, 1}}});
  CHECK(n2.right_kernel() == Subspace::span_of(f4, {{1, 0}}));
  CHECK(n2.left_kernel() == Subspace::span_of(f4, {{0, 1}}));
  CHECK(n2.radical().dim() == 0);
  CHECK(n2.kernels().corank == 1);

  QBicForm deg = QBicForm::from_type(f4, 2, FormType{1, {{1, 1}}});  // diag(1,0)
  CHECK(deg.radical() == Subspace::span_of(f4, {{0, 1}}));
}

TEST_CASE("smoothness, cones and singular loci") {
  Field f4(2, 2);

  QBicForm fermat = QBicForm::fermat(f4, 2, 5);
  CHECK(fermat.is_smooth());
  CHECK_FALSE(fermat.is_cone());

  // 1^3 + N_1: corank one, the singular point
  QBicForm cone = QBicForm::from_type(f4, 2, FormType{3, {{1, 1}}});
  CHECK_FALSE(cone.is_smooth());
  CHECK(cone.is_cone());
  CHECK(cone.singular_locus().dim() == 1);

  // N_2 + 1: corank one but radical zero, not a cone
  QBicForm n21 = QBicForm::from_type(f4, 2, FormType{1, {{2, 1}}});
  CHECK_FALSE(n21.is_smooth());
  CHECK_FALSE(n21.is_cone());

  QBicForm zero = QBicForm::from_type(f4, 2, FormType{0, {{1, 2}}});
  CHECK(zero.is_zero_form());
  CHECK_THROWS_AS(zero.is_smooth(), ZeroFormError);
  CHECK_THROWS_AS(zero.singular_locus(), ZeroFormError);
}

TEST_CASE("phi on the Fermat form is the q^2 Frobenius") {
  Field f16(2, 4);
  QBicForm fermat = QBicForm::fermat(f16, 2, 3);

  // rational vectors are fixed
  Embedding e = embed(Field(2, 2), f16);
  Vec rational{e(1), e(2), e(3)};
  CHECK(fermat.phi_apply(rational) == rational);
  CHECK(fermat.is_hermitian_vector(rational));

  // a vector with a coordinate outside GF(4) moves
  Fe mu = 0;
  for (Fe c = 2; c < 16; ++c) {
    if (f16.frobenius(c, 4) != c) { mu = c; break; }
  }
  Vec v{1, mu, 0};
  Vec img = fermat.phi_apply(v);
  CHECK(img == Vec{1, f16.frobenius(mu, 4), 0});
  CHECK(img != v);
  CHECK_FALSE(fermat.is_hermitian_vector(v));
  CHECK_FALSE(fermat.is_hermitian_point(v));

  QBicForm sing = QBicForm::from_type(f16, 2, FormType{1, {{1, 1}}});
  CHECK_THROWS_AS(sing.phi_apply(v), SingularFormError);
  CHECK_THROWS_AS(fermat.is_hermitian_vector(Vec{0, 0, 0}), ZeroVectorError);
}

TEST_CASE("phi-fixedness agrees with the Hermitian definition") {
  Field f4(2, 2);
  std::mt19937 rng(11);
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 8; ++trial) {
      QBicForm form(f4, 2, random_invertible(f4, dim, rng));
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < dim; ++i) total *= 4;
      for (std::uint64_t code = 1; code < total; ++code) {
        Vec v(dim);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < dim; ++i) {
          v[i] = c % 4;
          c /= 4;
        }
        CHECK(form.is_hermitian_vector(v) == hermitian_by_definition(form, v));
      }
    }
  }
}

TEST_CASE("phi identities (adjoint, twist, isotropy)") {
  Field f4(2, 2);
  std::mt19937 rng(23);
  const unsigned q = 2, qq = 4;
  for (std::size_t dim = 2; dim <= 3; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      QBicForm form(f4, 2, random_invertible(f4, dim, rng));
      const Matrix& a = form.gram();
      Matrix aq = a.frob_entries(q);
      for (int t = 0; t < 60; ++t) {
        Vec v(dim), w(dim);
        for (auto& x : v) x = rng() % 4;
        for (auto& x : w) x = rng() % 4;
        // w^T A phi(v) = (v^(q^2))^T A^(q) w
        Vec phiv = form.phi_apply(v);
        Fe lhs = dot(f4, w, a.apply(phiv));
        Fe rhs = dot(f4, frob_vec(f4, v, qq), aq.apply(w));
        CHECK(lhs == rhs);
        // evaluate(phi v1, phi v2) = evaluate(v1, v2)^(q^2)
        Vec v2(dim);
        for (auto& x : v2) x = rng() % 4;
        CHECK(form.evaluate(form.phi_apply(v), form.phi_apply(v2)) ==
              f4.pow(form.evaluate(v, v2), qq));
        // isotropy is phi-stable
        if (!is_zero_vec(v)) {
          CHECK((form.evaluate(v, v) == 0) == (form.evaluate(phiv, phiv) == 0));
        }
      }
    }
  }
}

TEST_CASE("build_gram_from_type") {
  Field f4(2, 2);
  CHECK(QBicForm::from_type(f4, 2, FormType{3, {}}).gram() == Matrix::identity(f4, 3));

  QBicForm n2 = QBicForm::from_type(f4, 2, FormType{0, {{2, 1}}});
  Matrix expect(f4, 2, 2);
  expect.at(0, 1) = 1;
  CHECK(n2.gram() == expect);

  QBicForm mixed = QBicForm::from_type(f4, 2, FormType{1, {{1, 1}}});
  Matrix d(f4, 2, 2);
  d.at(0, 0) = 1;
  CHECK(mixed.gram() == d);

  CHECK(FormType{1, {{2, 1}, {3, 2}}}.dimension() == 9);
}

TEST_CASE("classification of normal forms") {
  Field f4(2, 2);

  FormProfile fermat = classify_type(QBicForm::fermat(f4, 2, 4));
  REQUIRE(fermat.type.has_value());
  CHECK(fermat.type->a == 4);
  CHECK(fermat.type->blocks.empty());

  FormProfile deg = classify_type(QBicForm::from_type(f4, 2, FormType{1, {{1, 1}}}));
  REQUIRE(deg.type.has_value());
  CHECK(deg.type->a == 1);
  CHECK(deg.type->blocks == std::map<unsigned, unsigned>{{1, 1}});
}

TEST_CASE("N_4 and N_3 + 1 are distinguished") {
  Field f4(2, 2);
  QBicForm n4 = QBicForm::from_type(f4, 2, FormType{0, {{4, 1}}});
  QBicForm n31 = QBicForm::from_type(f4, 2, FormType{1, {{3, 1}}});

  FormProfile p4 = classify_type(n4);
  FormProfile p31 = classify_type(n31);
  // same rank, radical, and chain dimensions; the cross intersections differ
  CHECK(p4.rank == p31.rank);
  CHECK(p4.radical_dim == p31.radical_dim);
  CHECK_FALSE(p4.invariants_equal(p31));

  REQUIRE(p4.type.has_value());
  REQUIRE(p31.type.has_value());
  CHECK(p4.type->blocks == std::map<unsigned, unsigned>{{4, 1}});
  CHECK(p31.type->blocks == std::map<unsigned, unsigned>{{3, 1}});
}

TEST_CASE("normal forms of dims 4 and 5 all have distinct profiles") {
  Field f4(2, 2);
  for (unsigned dim : {4u, 5u}) {
    auto types = all_form_types(dim);
    std::vector<FormProfile> profiles;
    for (const auto& t : types) {
      profiles.push_back(classify_type(QBicForm::from_type(f4, 2, t)));
    }
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      REQUIRE(profiles[i].type.has_value());
      CHECK(*profiles[i].type == types[i]);
      for (std::size_t j = i + 1; j < profiles.size(); ++j) {
        CHECK_FALSE(profiles[i].invariants_equal(profiles[j]));
      }
    }
  }
}

TEST_CASE("classification is a twisted-congruence invariant") {
  Field f4(2, 2);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = 2 + trial % 3;
    auto types = all_form_types(static_cast<unsigned>(dim));
    const FormType& t = types[trial % types.size()];
    QBicForm form = QBicForm::from_type(f4, 2, t);
    Matrix p = random_invertible(f4, dim, rng);
    Matrix conj = p.frob_entries(2).transpose().mul(form.gram()).mul(p);
    FormProfile prof = classify_type(QBicForm(f4, 2, std::move(conj)));
    REQUIRE(prof.type.has_value());
    CHECK(*prof.type == t);
  }

  // arbitrary (also singular) Gram matrices: the full profile is invariant
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = 1 + trial % 4;
    Matrix a(f4, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a.at(i, j) = rng() % 4;
    Matrix p = random_invertible(f4, dim, rng);
    Matrix conj = p.frob_entries(2).transpose().mul(a).mul(p);
    FormProfile before = classify_type(QBicForm(f4, 2, a));
    FormProfile after = classify_type(QBicForm(f4, 2, conj));
    CHECK(before.invariants_equal(after));
    CHECK(before.matches == after.matches);
  }
}

TEST_CASE("profile invariants") {
  Field f4(2, 2);
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t dim = 1 + trial % 4;
    Matrix m(f4, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng() % 4;
    QBicForm form(f4, 2, std::move(m));
    FormProfile p = classify_type(form);
    CHECK(p.corank == p.dim - p.rank);
    CHECK(form.right_kernel().contains(form.radical()));
    for (std::size_t i = 1; i < p.right_chain.size(); ++i) {
      CHECK(p.right_chain[i] >= p.right_chain[i - 1]);
      CHECK(p.left_chain[i] >= p.left_chain[i - 1]);
    }
    // type bookkeeping: sum m b_m + a = dim and sum b_m = corank
    if (p.type) {
      CHECK(p.type->dimension() == p.dim);
      CHECK(p.type->corank() == p.corank);
    }
  }
}

TEST_CASE("isotropic restriction is the zero form, and conversely") {
  Field f4(2, 2);
  QBicForm fermat = QBicForm::fermat(f4, 2, 4);
  std::size_t zero_restrictions = 0, isotropic = 0;
  for_each_subspace(f4, 4, 2, [&](const Matrix& m) {
    Subspace u = Subspace::span(m);
    bool iso = is_isotropic(fermat, u);
    bool zero = fermat.restrict_to(u).is_zero_form();
    CHECK(iso == zero);
    zero_restrictions += zero;
    isotropic += iso;
    return true;
  });
  CHECK(isotropic == 27);
  CHECK(zero_restrictions == 27);
}

TEST_CASE("base change preserves evaluation") {
  Field f4(2, 2);
  Field f16(2, 4);
  Embedding e = embed(f4, f16);
  QBicForm form = QBicForm::fermat(f4, 2, 3);
  QBicForm big = form.base_change(e);
  for (Fe a = 0; a < 4; ++a) {
    Vec v{a, 1, f4.mul(a, a)};
    Vec w{e(v[0]), e(v[1]), e(v[2])};
    CHECK(e(form.evaluate(v, v)) == big.evaluate(w, w));
  }
}
