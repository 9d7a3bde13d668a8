#include "extforge/steenrod.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace extforge;
using namespace extforge::steenrod;

namespace {

/* Independent oracle: literal free-word enumeration plus the span of all
 * products u*r*v inside the degree-d slice. Exponential in general; used
 * only to cross-check small algebras. */
void words_rec(const std::vector<Generator>& gens, unsigned d, Word& cur,
               std::vector<Word>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].degree > d) continue;
    cur.push_back(uint16_t(g));
    words_rec(gens, d - gens[g].degree, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> words_of_degree(const std::vector<Generator>& gens, unsigned d) {
  std::vector<Word> out;
  Word cur;
  words_rec(gens, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

size_t word_oracle_dim(const Presentation& pres, unsigned d) {
  auto words = words_of_degree(pres.generators, d);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  fglinalg::FpRowSpan ideal(pres.p, words.size());
  for (const auto& r : pres.relations) {
    unsigned dr = word_degree(r[0].word, pres.generators);
    if (dr > d) continue;
    for (unsigned du = 0; du + dr <= d; ++du) {
      auto us = words_of_degree(pres.generators, du);
      auto vs = words_of_degree(pres.generators, d - dr - du);
      for (const auto& u : us)
        for (const auto& v : vs) {
          std::vector<uint32_t> row(words.size(), 0);
          for (const auto& t : r) {
            Word w = u;
            w.insert(w.end(), t.word.begin(), t.word.end());
            w.insert(w.end(), v.begin(), v.end());
            size_t i = index.at(w);
            row[i] = (row[i] + t.coeff) % pres.p;
          }
          ideal.insert(std::move(row));
        }
    }
  }
  return words.size() - ideal.rank();
}

/* Admissible-monomial count for the odd-primary Steenrod algebra:
 * beta^{e0} P^{s1} beta^{e1} ... P^{sk} beta^{ek}, s_i >= p*s_{i+1} + e_i. */
void odd_admissible_rec(uint32_t p, unsigned q, unsigned maxdeg, unsigned min_s,
                        unsigned deg, std::vector<unsigned>& counts) {
  // extend leftward: prepend P^{s} beta^{e} with s >= p*min_s + e
  for (unsigned e = 0; e <= 1; ++e) {
    unsigned smin = std::max(1u, p * min_s + e);
    for (unsigned s = smin; deg + q * s + e <= maxdeg; ++s) {
      unsigned nd = deg + q * s + e;
      counts[nd] += 1;
      if (nd + 1 <= maxdeg) counts[nd + 1] += 1; // optional leading beta
      odd_admissible_rec(p, q, maxdeg, s, nd, counts);
    }
  }
}

std::vector<unsigned> odd_admissible_counts(uint32_t p, unsigned maxdeg) {
  unsigned q = 2 * (p - 1);
  std::vector<unsigned> counts(maxdeg + 1, 0);
  counts[0] = 1;                   // unit
  if (maxdeg >= 1) counts[1] += 1; // beta alone
  for (unsigned e = 0; e <= 1; ++e)
    for (unsigned s = 1; q * s + e <= maxdeg; ++s) {
      unsigned nd = q * s + e;
      counts[nd] += 1;
      if (nd + 1 <= maxdeg) counts[nd + 1] += 1;
      odd_admissible_rec(p, q, maxdeg, s, nd, counts);
    }
  return counts;
}

std::vector<size_t> dims_vector(const Algebra& a, unsigned maxd) {
  std::vector<size_t> v;
  for (unsigned d = 0; d <= maxd; ++d) v.push_back(a.dim(d));
  return v;
}

} // namespace

TEST_CASE("E(1) at p=2: basis {1, Q0, Q1, Q0Q1} in degrees {0,1,3,4}") {
  auto a = builtin("E1_2");
  CHECK(a->dim(0) == 1);
  CHECK(a->dim(1) == 1);
  CHECK(a->dim(2) == 0);
  CHECK(a->dim(3) == 1);
  CHECK(a->dim(4) == 1);
  CHECK(a->dim(5) == 0);
  CHECK(a->total_dim() == 4);
  CHECK(a->top_degree() == 4);
}

TEST_CASE("E(1) at p=3 and p=5: |Q1| = 2p-1") {
  auto a3 = builtin("E1_3");
  CHECK(a3->dim(5) == 1);
  CHECK(a3->total_dim() == 4);
  CHECK(a3->top_degree() == 6);
  auto a5 = builtin("E1_5");
  CHECK(a5->dim(9) == 1);
  CHECK(a5->total_dim() == 4);
}

TEST_CASE("exterior algebra on x1, x5, x9: dimension 8, top degree 15") {
  auto b = builtin("ExteriorB");
  CHECK(b->total_dim() == 8);
  CHECK(b->top_degree() == 15);
  for (unsigned d : {0u, 1u, 5u, 6u, 9u, 10u, 14u, 15u}) CHECK(b->dim(d) == 1);
  CHECK(b->dim(2) == 0);
}

TEST_CASE("A^tmf at p=3: presentation shape and frozen dimension table") {
  auto a = builtin("Atmf3");
  CHECK(a->presentation().generators.size() == 2);
  CHECK(a->presentation().relations.size() == 3);
  // regression fixture, cross-checked below against the word-enumeration
  // oracle; equals the series (1+t)(1+t^4+t^8)(1+t^5)(1+t^9)
  std::vector<size_t> expected = {1, 1, 0, 0, 1, 2, 1, 0, 1, 3, 2, 0,
                                  0, 2, 3, 1, 0, 1, 2, 1, 0, 0, 1, 1};
  CHECK(dims_vector(*a, 23) == expected);
  CHECK(a->total_dim() == 24);
  CHECK(a->top_degree() == 23);
}

TEST_CASE("word-enumeration ideal-slice oracle agrees with the built basis") {
  auto e1 = builtin("E1_2");
  for (unsigned d = 1; d <= 8; ++d)
    CHECK(e1->dim(d) == word_oracle_dim(e1->presentation(), d));
  auto atmf = builtin("Atmf3");
  for (unsigned d = 1; d <= 14; ++d)
    CHECK(atmf->dim(d) == word_oracle_dim(atmf->presentation(), d));
  auto b = builtin("ExteriorB");
  for (unsigned d = 1; d <= 16; ++d)
    CHECK(b->dim(d) == word_oracle_dim(b->presentation(), d));
}

TEST_CASE("multiplication: beta^2 = 0 in A^tmf, unit law, associativity") {
  auto a = builtin("Atmf3");
  auto beta = a->generator_element(0);
  CHECK((beta * beta).is_zero());
  auto p1 = a->generator_element(1);
  CHECK(a->unit() * p1 == p1);
  CHECK(p1 * a->unit() == p1);

  std::mt19937 rng(3);
  std::vector<std::pair<unsigned, size_t>> basis;
  for (unsigned d = 0; d <= 10; ++d)
    for (size_t k = 0; k < a->dim(d); ++k) basis.push_back({d, k});
  for (int trial = 0; trial < 200; ++trial) {
    auto [d1, k1] = basis[rng() % basis.size()];
    auto [d2, k2] = basis[rng() % basis.size()];
    auto [d3, k3] = basis[rng() % basis.size()];
    if (d1 + d2 + d3 > a->truncation()) continue;
    auto x = a->basis_element(d1, k1), y = a->basis_element(d2, k2),
         z = a->basis_element(d3, k3);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("dimension per degree never exceeds the free word count") {
  auto a = builtin("Atmf3");
  for (unsigned d = 1; d <= 12; ++d)
    CHECK(a->dim(d) <= words_of_degree(a->presentation().generators, d).size());
}

TEST_CASE("P1 P^n = (n+1) P^{n+1} in the truncated mod-3 Steenrod algebra") {
  auto a = builtin("TruncatedA_3_24");
  int p1 = a->generator_index("P1");
  REQUIRE(p1 >= 0);
  auto P1 = a->generator_element(size_t(p1));
  for (unsigned n = 1; 4 * (n + 1) <= 24; ++n) {
    auto Pn = a->generator_element(size_t(a->generator_index("P" + std::to_string(n))));
    auto Pn1 =
        a->generator_element(size_t(a->generator_index("P" + std::to_string(n + 1))));
    CHECK(P1 * Pn == Pn1.scaled((n + 1) % 3));
  }
}

TEST_CASE("truncated mod-2 Steenrod algebra: classical Adem identities") {
  auto a = builtin("TruncatedA_2_14");
  auto sq = [&](unsigned i) {
    return a->generator_element(size_t(a->generator_index("Sq" + std::to_string(i))));
  };
  CHECK((sq(1) * sq(1)).is_zero());
  CHECK(sq(1) * sq(2) == sq(3));
  CHECK(sq(2) * sq(2) == sq(3) * sq(1));
  CHECK(sq(2) * sq(4) == sq(6) + sq(5) * sq(1));
  CHECK(sq(3) * sq(2) == a->zero());
}

TEST_CASE("truncated algebras match admissible-monomial counts") {
  auto a2 = builtin("TruncatedA_2_14");
  AdmissibleMod2 table(14);
  for (unsigned d = 0; d <= 14; ++d) CHECK(a2->dim(d) == table.dim(d));
  auto a3 = builtin("TruncatedA_3_24");
  auto counts = odd_admissible_counts(3, 24);
  for (unsigned d = 0; d <= 24; ++d) CHECK(a3->dim(d) == counts[d]);
}

TEST_CASE("Q1 = P1 b - b P1 squares to zero in the truncated mod-3 algebra") {
  auto a = builtin("TruncatedA_3_24");
  const uint16_t B = 0, P = uint16_t(a->generator_index("P1"));
  Relation q1_squared = {
      {1, {P, B, P, B}}, {2, {P, B, B, P}}, {2, {B, P, P, B}}, {1, {B, P, B, P}}};
  CHECK(a->verify_relation_consequence(q1_squared));
}

TEST_CASE("relation consequences in A^tmf: x5^2 = 0") {
  auto a = builtin("Atmf3");
  const uint16_t B = 0, P = 1;
  // x5 = P1 b - b P1; x5^2 expands to four degree-10 words
  Relation x5_squared = {
      {1, {P, B, P, B}}, {2, {P, B, B, P}}, {2, {B, P, P, B}}, {1, {B, P, B, P}}};
  CHECK(a->verify_relation_consequence(x5_squared));
  // x9 = P1 P1 b - b P1 P1 also squares to zero
  Relation x9_squared = {{1, {P, P, B, P, P, B}},
                         {2, {P, P, B, B, P, P}},
                         {2, {B, P, P, P, P, B}},
                         {1, {B, P, P, B, P, P}}};
  CHECK(a->verify_relation_consequence(x9_squared));
  // x1 x5 + x5 x1 = 0
  Relation anti = {{1, {B, P, B}}, {2, {B, B, P}}, {1, {P, B, B}}};
  CHECK(a->verify_relation_consequence(anti));
}

TEST_CASE("exterior commutation in E(1) and a non-consequence") {
  auto e = builtin("E1_2");
  Relation comm = {{1, {0, 1}}, {1, {1, 0}}};
  CHECK(e->verify_relation_consequence(comm));
  auto atmf = builtin("Atmf3");
  Relation p1_alone = {{1, {1}}};
  CHECK(!atmf->verify_relation_consequence(p1_alone));
}

TEST_CASE("canonical basis does not depend on relation ordering") {
  auto a = builtin("Atmf3");
  Presentation shuffled = a->presentation();
  std::reverse(shuffled.relations.begin(), shuffled.relations.end());
  Algebra b(shuffled);
  for (unsigned d = 0; d <= 23; ++d) CHECK(a->basis_words(d) == b.basis_words(d));
}

TEST_CASE("A(1): dimension 8 and its classical presentation holds") {
  auto a = builtin("A1");
  CHECK(a->total_dim() == 8);
  CHECK(a->top_degree() == 6);
  const uint16_t S1 = 0, S2 = 1;
  CHECK(a->verify_relation_consequence({{1, {S1, S1}}}));
  CHECK(a->verify_relation_consequence({{1, {S2, S2}}, {1, {S1, S2, S1}}}));
}

TEST_CASE("A(2): dimension 64, top degree 23, Poincare-symmetric dims") {
  auto a = builtin("A2");
  CHECK(a->total_dim() == 64);
  CHECK(a->top_degree() == 23);
  for (unsigned d = 0; d <= 23; ++d) CHECK(a->dim(d) == a->dim(23 - d));
}

TEST_CASE("algebra homomorphisms validate against source relations") {
  auto b = builtin("ExteriorB");
  auto atmf = builtin("Atmf3");
  auto beta = atmf->generator_element(0);
  auto p1 = atmf->generator_element(1);
  auto x5 = p1 * beta + (beta * p1).scaled(2);
  auto x9 = p1 * p1 * beta + (beta * p1 * p1).scaled(2);
  AlgebraHom incl{b, atmf, {beta, x5, x9}};
  CHECK(incl.validate());
  AlgebraHom bad{b, atmf, {p1, x5, x9}}; // x1 -> P1 breaks x1^2 = 0
  CHECK(!bad.validate());
}

TEST_CASE("truncation errors and unknown names") {
  auto e = builtin("E1_2");
  CHECK_THROWS_AS(e->dim(e->truncation() + 1), Error);
  CHECK_THROWS_AS(e->word_class(Word(e->truncation() + 1, 0)), Error);
  CHECK_THROWS_AS(builtin("Nope"), Error);
  try {
    builtin("Nope");
  } catch (const Error& err) {
    CHECK(err.code() == errc::unknown_algebra);
  }
}

TEST_CASE("binomials mod p") {
  CHECK(binom_mod(4, 2, 2) == 0);
  CHECK(binom_mod(5, 2, 2) == 0);
  CHECK(binom_mod(5, 1, 2) == 1);
  CHECK(binom_mod(-1, 3, 2) == 1);
  CHECK(binom_mod(-2, 1, 3) == 1); // C(-2,1) = -2 = 1 mod 3
  CHECK(binom_mod(7, 3, 5) == 0);  // 35 = 0 mod 5
  CHECK(binom_mod(6, 3, 7) == 6);  // 20 = 6 mod 7
}
