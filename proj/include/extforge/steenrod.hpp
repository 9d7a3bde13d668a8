#pragma once

/* Finite graded F_p-algebras presented by generators and relations.
 *
 * Quotient bases are computed degree by degree: the degree-d slice of the
 * algebra is the quotient of C_d = (+)_g g * A_{d-|g|} by the span of all
 * relation multiples r * a with a running over lower-degree basis classes.
 * This is the two-sided ideal slice written in collapsed coordinates; no
 * rewriting or completion is involved, and the resulting representative
 * words are canonical (unique RREF complement, stable under permutations
 * of the relation list).
 */

#include "extforge/error.hpp"
#include "extforge/fglinalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace extforge::steenrod {

using fglinalg::FpMatrix;
using fglinalg::FpRowSpan;

using Word = std::vector<uint16_t>; // generator indices, empty = unit

struct Generator {
  std::string name;
  unsigned degree = 0;
};

struct RelTerm {
  uint32_t coeff = 0;
  Word word;
};
using Relation = std::vector<RelTerm>;

struct Presentation {
  uint32_t p = 2;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  unsigned truncation = 48;
  std::string name; // registry name, empty for ad-hoc presentations
};

inline unsigned word_degree(const Word& w, const std::vector<Generator>& gens) {
  unsigned d = 0;
  for (auto g : w) d += gens.at(g).degree;
  return d;
}

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class AlgebraElement {
public:
  AlgebraElement() = default;
  AlgebraElement(const Algebra* owner) : owner_(owner) {}

  const Algebra* owner() const { return owner_; }
  bool is_zero() const;
  /* degree -> coordinates in the canonical basis; absent degrees are zero */
  const std::map<unsigned, std::vector<uint32_t>>& components() const { return comps_; }
  std::vector<uint32_t> component(unsigned d) const;

  void add(unsigned degree, size_t basis_index, uint32_t coeff);
  void add_vector(unsigned degree, const std::vector<uint32_t>& coords, uint32_t scale = 1);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(uint32_t c) const;
  bool operator==(const AlgebraElement& o) const;

private:
  friend class Algebra;
  const Algebra* owner_ = nullptr;
  std::map<unsigned, std::vector<uint32_t>> comps_;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  explicit Algebra(Presentation pres) : pres_(std::move(pres)) {
    if (!fglinalg::is_prime(pres_.p))
      throw Error(errc::shape_mismatch, "algebra modulus must be prime");
    validate_relations();
    build(pres_.truncation);
  }

  const Presentation& presentation() const { return pres_; }
  uint32_t prime() const { return pres_.p; }
  unsigned truncation() const { return pres_.truncation; }
  size_t generator_count() const { return pres_.generators.size(); }
  const Generator& generator(size_t i) const { return pres_.generators.at(i); }
  int generator_index(const std::string& name) const {
    for (size_t i = 0; i < pres_.generators.size(); ++i)
      if (pres_.generators[i].name == name) return int(i);
    return -1;
  }

  size_t dim(unsigned d) const {
    check_degree(d);
    return basis_words_[d].size();
  }
  size_t total_dim() const {
    size_t n = 0;
    for (const auto& b : basis_words_) n += b.size();
    return n;
  }
  unsigned top_degree() const {
    for (unsigned d = pres_.truncation + 1; d-- > 0;)
      if (!basis_words_[d].empty()) return d;
    return 0;
  }
  const std::vector<Word>& basis_words(unsigned d) const {
    check_degree(d);
    return basis_words_[d];
  }

  /* Left multiplication by generator g: dim(d) -> dim(d + |g|). */
  const FpMatrix& lmul(size_t g, unsigned d) const {
    check_degree(d + pres_.generators.at(g).degree);
    return lmul_[g][d];
  }

  /* Canonical coordinates of a word, or throws TRUNCATION_EXCEEDED. */
  std::vector<uint32_t> word_class(const Word& w) const {
    unsigned d = word_degree(w, pres_.generators);
    check_degree(d);
    std::vector<uint32_t> v(dim(0), 0);
    if (!v.empty()) v[0] = 1;
    unsigned deg = 0;
    for (size_t i = w.size(); i-- > 0;) {
      const auto& m = lmul_[w[i]][deg];
      v = m.apply(v);
      deg += pres_.generators[w[i]].degree;
    }
    return v;
  }

  AlgebraElement element_from_word(const Word& w, uint32_t coeff = 1) const {
    unsigned d = word_degree(w, pres_.generators);
    AlgebraElement e(this);
    e.add_vector(d, word_class(w), coeff % pres_.p);
    return e;
  }
  AlgebraElement element_from_terms(const Relation& terms) const {
    AlgebraElement e(this);
    for (const auto& t : terms) {
      unsigned d = word_degree(t.word, pres_.generators);
      e.add_vector(d, word_class(t.word), t.coeff % pres_.p);
    }
    return e;
  }
  AlgebraElement unit() const { return element_from_word({}); }
  AlgebraElement generator_element(size_t g) const { return element_from_word({uint16_t(g)}); }
  AlgebraElement zero() const { return AlgebraElement(this); }
  AlgebraElement basis_element(unsigned d, size_t k) const {
    check_degree(d);
    AlgebraElement e(this);
    e.add(d, k, 1);
    return e;
  }

  /* True iff the homogeneous combination lies in the two-sided ideal. */
  bool verify_relation_consequence(const Relation& candidate) const {
    if (candidate.empty()) return true;
    unsigned d = word_degree(candidate[0].word, pres_.generators);
    for (const auto& t : candidate)
      if (word_degree(t.word, pres_.generators) != d)
        throw Error(errc::shape_mismatch, "candidate relation not homogeneous");
    check_degree(d);
    return element_from_terms(candidate).is_zero();
  }

  std::string word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (auto g : w) {
      if (!s.empty()) s += ".";
      s += pres_.generators[g].name;
    }
    return s;
  }
  std::string element_str(const AlgebraElement& e) const;

private:
  void check_degree(unsigned d) const {
    if (d > pres_.truncation)
      throw Error(errc::truncation_exceeded,
                  "degree " + std::to_string(d) + " beyond truncation " +
                      std::to_string(pres_.truncation));
  }
  void validate_relations() const {
    for (const auto& r : pres_.relations) {
      if (r.empty()) continue;
      unsigned d = word_degree(r[0].word, pres_.generators);
      if (d == 0 || d > pres_.truncation)
        throw Error(errc::truncation_exceeded, "relation degree out of range");
      for (const auto& t : r) {
        if (t.word.empty()) throw Error(errc::shape_mismatch, "relation with unit term");
        if (word_degree(t.word, pres_.generators) != d)
          throw Error(errc::shape_mismatch, "relation not degree-homogeneous");
      }
    }
  }

  void build(unsigned T) {
    const uint32_t p = pres_.p;
    const size_t ng = pres_.generators.size();
    basis_words_.assign(T + 1, {});
    basis_words_[0].push_back({}); // the unit
    lmul_.assign(ng, std::vector<FpMatrix>(T + 1));
    for (unsigned d = 1; d <= T; ++d) {
      // candidate space C_d = (+)_g g * A_{d-|g|}, columns ordered (g, k)
      std::vector<size_t> offset(ng + 1, 0);
      for (size_t g = 0; g < ng; ++g) {
        unsigned gd = pres_.generators[g].degree;
        size_t block = (gd <= d) ? basis_words_[d - gd].size() : 0;
        offset[g + 1] = offset[g] + block;
      }
      const size_t width = offset[ng];
      FpRowSpan killed(p, width);
      for (const auto& r : pres_.relations) {
        unsigned rd = word_degree(r[0].word, pres_.generators);
        if (rd > d) continue;
        for (size_t a = 0; a < basis_words_[d - rd].size(); ++a) {
          const Word& u = basis_words_[d - rd][a];
          std::vector<uint32_t> row(width, 0);
          for (const auto& t : r) {
            uint16_t g = t.word[0];
            Word tail(t.word.begin() + 1, t.word.end());
            tail.insert(tail.end(), u.begin(), u.end());
            auto cls = word_class(tail); // degree d - |g|, already built
            for (size_t k = 0; k < cls.size(); ++k)
              row[offset[g] + k] =
                  uint32_t((row[offset[g] + k] + uint64_t(t.coeff) * cls[k]) % p);
          }
          killed.insert(std::move(row));
        }
      }
      // non-pivot columns survive; their representative words are canonical
      std::vector<size_t> col_to_basis(width, SIZE_MAX);
      {
        const auto& piv = killed.pivots();
        size_t kp = 0;
        for (size_t c = 0; c < width; ++c) {
          if (kp < piv.size() && piv[kp] == c) { ++kp; continue; }
          col_to_basis[c] = basis_words_[d].size();
          size_t g = size_t(std::upper_bound(offset.begin(), offset.end(), c) -
                            offset.begin()) - 1;
          Word w{uint16_t(g)};
          const Word& tail = basis_words_[d - pres_.generators[g].degree][c - offset[g]];
          w.insert(w.end(), tail.begin(), tail.end());
          basis_words_[d].push_back(std::move(w));
        }
      }
      const size_t dim_d = basis_words_[d].size();
      // reduction of a C_d unit vector to canonical coordinates
      auto reduce_col = [&](size_t c) {
        std::vector<uint32_t> unit(width, 0);
        unit[c] = 1;
        auto res = killed.reduce(std::move(unit));
        std::vector<uint32_t> out(dim_d, 0);
        for (size_t j = 0; j < width; ++j)
          if (res[j] && col_to_basis[j] != SIZE_MAX) out[col_to_basis[j]] = res[j];
        return out;
      };
      for (size_t g = 0; g < ng; ++g) {
        unsigned gd = pres_.generators[g].degree;
        if (gd > d) continue;
        size_t src = basis_words_[d - gd].size();
        FpMatrix m(p, dim_d, src);
        for (size_t k = 0; k < src; ++k) {
          auto col = reduce_col(offset[g] + k);
          for (size_t i = 0; i < dim_d; ++i) m(i, k) = col[i];
        }
        lmul_[g][d - gd] = std::move(m);
      }
    }
    // left multiplication out of degrees at the truncation boundary is not
    // represented; operations that would need it raise TRUNCATION_EXCEEDED
  }

  Presentation pres_;
  std::vector<std::vector<Word>> basis_words_;
  std::vector<std::vector<FpMatrix>> lmul_; // [generator][source degree]
};

inline bool AlgebraElement::is_zero() const {
  for (const auto& [d, v] : comps_)
    for (auto c : v)
      if (c) return false;
  return true;
}

inline std::vector<uint32_t> AlgebraElement::component(unsigned d) const {
  auto it = comps_.find(d);
  if (it != comps_.end()) return it->second;
  return std::vector<uint32_t>(owner_ ? owner_->dim(d) : 0, 0);
}

inline void AlgebraElement::add(unsigned degree, size_t basis_index, uint32_t coeff) {
  auto& v = comps_[degree];
  v.resize(owner_->dim(degree), 0);
  v.at(basis_index) = (v.at(basis_index) + coeff) % owner_->prime();
}

inline void AlgebraElement::add_vector(unsigned degree, const std::vector<uint32_t>& coords,
                                       uint32_t scale) {
  if (coords.empty()) return;
  auto& v = comps_[degree];
  v.resize(owner_->dim(degree), 0);
  for (size_t i = 0; i < coords.size(); ++i)
    v[i] = uint32_t((v[i] + uint64_t(scale) * coords[i]) % owner_->prime());
}

inline AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (owner_ != o.owner_) throw Error(errc::shape_mismatch, "elements of different algebras");
  AlgebraElement r = *this;
  for (const auto& [d, v] : o.comps_) r.add_vector(d, v);
  return r;
}

inline AlgebraElement AlgebraElement::scaled(uint32_t c) const {
  AlgebraElement r(owner_);
  for (const auto& [d, v] : comps_) r.add_vector(d, v, c % owner_->prime());
  return r;
}

inline bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (owner_ != o.owner_) return false;
  AlgebraElement diff = *this + o.scaled(owner_->prime() - 1);
  return diff.is_zero();
}

inline AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (owner_ != o.owner_) throw Error(errc::shape_mismatch, "elements of different algebras");
  const Algebra& A = *owner_;
  AlgebraElement r(owner_);
  for (const auto& [da, va] : comps_)
    for (const auto& [db, vb] : o.comps_) {
      unsigned d = da + db;
      if (d > A.truncation())
        throw Error(errc::truncation_exceeded, "product degree beyond truncation");
      for (size_t i = 0; i < va.size(); ++i) {
        if (!va[i]) continue;
        for (size_t j = 0; j < vb.size(); ++j) {
          if (!vb[j]) continue;
          Word w = A.basis_words(da)[i];
          const Word& w2 = A.basis_words(db)[j];
          w.insert(w.end(), w2.begin(), w2.end());
          uint32_t c = uint32_t((uint64_t(va[i]) * vb[j]) % A.prime());
          r.add_vector(d, A.word_class(w), c);
        }
      }
    }
  return r;
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b;
}

inline std::string Algebra::element_str(const AlgebraElement& e) const {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [d, v] : e.components())
    for (size_t i = 0; i < v.size(); ++i) {
      if (!v[i]) continue;
      if (!s.empty()) s += " + ";
      if (v[i] != 1) s += std::to_string(v[i]) + "*";
      s += word_str(basis_words(d)[i]);
    }
  return s;
}

/* Algebra homomorphism given by generator images; valid iff every relation
 * of the source maps to a relation consequence in the target. */
struct AlgebraHom {
  AlgebraPtr from, to;
  std::vector<AlgebraElement> images; // one per source generator

  bool validate() const {
    for (const auto& r : from->presentation().relations) {
      AlgebraElement acc = to->zero();
      for (const auto& t : r) {
        AlgebraElement prod = to->unit();
        for (auto g : t.word) prod = prod * images.at(g);
        acc = acc + prod.scaled(t.coeff);
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }
  AlgebraElement apply_word(const Word& w) const {
    AlgebraElement prod = to->unit();
    for (auto g : w) prod = prod * images.at(g);
    return prod;
  }
};

// ----------------------------------------------------------------------------
// Binomial coefficients mod p (Lucas), for the Adem relation generators

inline uint32_t binom_mod(long n, long k, uint32_t p) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n,k) = (-1)^k C(k-n-1, k)
    uint32_t c = binom_mod(k - n - 1, k, p);
    return (k % 2 == 0) ? c : (p - c) % p;
  }
  if (k > n) return 0;
  uint64_t result = 1;
  while (n > 0 || k > 0) {
    long ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // small Pascal triangle per digit
    uint64_t c = 1;
    for (long i = 0; i < ki; ++i) c = c * (ni - i) / (i + 1);
    result = (result * (c % p)) % p;
    n /= p;
    k /= p;
  }
  return uint32_t(result);
}

// ----------------------------------------------------------------------------
// Admissible-basis engine for the mod-2 Steenrod algebra. Used to present
// the finite subalgebras A(1), A(2) by evaluating candidate words against
// the admissible normal form.

class AdmissibleMod2 {
public:
  explicit AdmissibleMod2(unsigned max_degree) : maxd_(max_degree) {
    monos_.resize(maxd_ + 1);
    monos_[0].push_back({});
    std::vector<unsigned> seq;
    gen(seq, 0, 0);
    for (unsigned d = 0; d <= maxd_; ++d)
      for (size_t i = 0; i < monos_[d].size(); ++i) index_[monos_[d][i]] = i;
  }

  size_t dim(unsigned d) const { return d <= maxd_ ? monos_[d].size() : 0; }
  const std::vector<std::vector<unsigned>>& monomials(unsigned d) const { return monos_[d]; }

  /* Coordinates of a Sq-word product in the admissible basis. */
  std::vector<uint32_t> evaluate_word(const std::vector<unsigned>& sq_word) const {
    unsigned d = 0;
    for (auto a : sq_word) d += a;
    if (d > maxd_) throw Error(errc::truncation_exceeded, "admissible table too small");
    std::vector<uint32_t> v(dim(0), 0);
    v[0] = 1;
    unsigned deg = 0;
    for (size_t i = sq_word.size(); i-- > 0;) {
      v = mul_sq(sq_word[i], v, deg);
      deg += sq_word[i];
    }
    return v;
  }

private:
  void gen(std::vector<unsigned>& seq, unsigned degree, unsigned) {
    unsigned lead_max = maxd_ - degree;
    unsigned lead_min = seq.empty() ? 1 : 2 * seq.back();
    // build sequences from the right: seq holds the reversed tail
    for (unsigned a = lead_min; a <= lead_max; ++a) {
      seq.push_back(a);
      std::vector<unsigned> mono(seq.rbegin(), seq.rend());
      monos_[degree + a].push_back(mono);
      gen(seq, degree + a, 0);
      seq.pop_back();
    }
  }

  /* Sq^a times an admissible monomial of the given degree, by Adem. */
  std::vector<uint32_t> mul_sq_mono(unsigned a, const std::vector<unsigned>& m,
                                    unsigned mdeg) const {
    unsigned d = a + mdeg;
    std::vector<uint32_t> out(dim(d), 0);
    if (a == 0) {
      out[index_.at(m)] = 1;
      return out;
    }
    if (m.empty() || a >= 2 * m[0]) {
      std::vector<unsigned> w{a};
      w.insert(w.end(), m.begin(), m.end());
      out[index_.at(w)] = 1;
      return out;
    }
    auto key = std::make_pair(a, m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    unsigned b = m[0];
    std::vector<unsigned> rest(m.begin() + 1, m.end());
    unsigned rest_deg = mdeg - b;
    for (long j = 0; 2 * j <= long(a); ++j) {
      if (binom_mod(long(b) - 1 - j, long(a) - 2 * j, 2) == 0) continue;
      // Sq^{a+b-j} (Sq^j rest)
      auto inner = (j == 0) ? mono_vector(rest, rest_deg)
                            : mul_sq_mono(unsigned(j), rest, rest_deg);
      auto outer = mul_sq(a + b - unsigned(j), inner, rest_deg + unsigned(j));
      for (size_t i = 0; i < out.size(); ++i) out[i] ^= outer[i];
    }
    cache_.emplace(key, out);
    return out;
  }

  std::vector<uint32_t> mono_vector(const std::vector<unsigned>& m, unsigned d) const {
    std::vector<uint32_t> v(dim(d), 0);
    v[index_.at(m)] = 1;
    return v;
  }

  std::vector<uint32_t> mul_sq(unsigned a, const std::vector<uint32_t>& v,
                               unsigned vdeg) const {
    if (a == 0) return v;
    std::vector<uint32_t> out(dim(vdeg + a), 0);
    for (size_t i = 0; i < v.size(); ++i) {
      if (!v[i]) continue;
      auto t = mul_sq_mono(a, monos_[vdeg][i], vdeg);
      for (size_t k = 0; k < out.size(); ++k) out[k] ^= t[k];
    }
    return out;
  }

  unsigned maxd_;
  std::vector<std::vector<std::vector<unsigned>>> monos_;
  std::map<std::vector<unsigned>, size_t> index_;
  mutable std::map<std::pair<unsigned, std::vector<unsigned>>, std::vector<uint32_t>> cache_;
};

// ----------------------------------------------------------------------------
// Builtin presentations

namespace detail {

inline Relation square(uint16_t g) { return {{1, {g, g}}}; }
inline Relation anticommutator(uint16_t g, uint16_t h) {
  return {{1, {g, h}}, {1, {h, g}}}; // x y + y x
}

/* Present the subalgebra of the mod-2 Steenrod algebra generated by the
 * given squares: relations are discovered degreewise as the kernel of the
 * evaluation into the admissible basis. */
inline Presentation subalgebra_of_a2(const std::vector<unsigned>& squares,
                                     unsigned degree_bound, const std::string& name,
                                     unsigned truncation) {
  Presentation pres;
  pres.p = 2;
  pres.truncation = truncation;
  pres.name = name;
  for (auto s : squares) pres.generators.push_back({"Sq" + std::to_string(s), s});
  AdmissibleMod2 table(degree_bound);
  for (unsigned d = 1; d <= degree_bound; ++d) {
    for (;;) {
      Presentation probe = pres;
      probe.truncation = d;
      Algebra A(probe);
      size_t n = A.dim(d);
      if (n == 0) break;
      // evaluation matrix: candidate basis word -> admissible coordinates
      FpMatrix ev(2, table.dim(d), n);
      for (size_t k = 0; k < n; ++k) {
        std::vector<unsigned> sq_word;
        for (auto g : A.basis_words(d)[k]) sq_word.push_back(squares[g]);
        auto col = table.evaluate_word(sq_word);
        for (size_t i = 0; i < col.size(); ++i) ev(i, k) = col[i];
      }
      auto ker = fglinalg::kernel_basis(ev);
      if (ker.rows() == 0) break;
      for (size_t r = 0; r < ker.rows(); ++r) {
        Relation rel;
        for (size_t k = 0; k < n; ++k)
          if (ker(r, k)) rel.push_back({ker(r, k), A.basis_words(d)[k]});
        pres.relations.push_back(std::move(rel));
      }
    }
  }
  return pres;
}

/* Adem relations for the truncated mod-2 Steenrod algebra on Sq^1..Sq^T. */
inline Presentation truncated_a_mod2(unsigned T) {
  Presentation pres;
  pres.p = 2;
  pres.truncation = T;
  pres.name = "TruncatedA_2_" + std::to_string(T);
  for (unsigned i = 1; i <= T; ++i)
    pres.generators.push_back({"Sq" + std::to_string(i), i});
  auto gi = [](unsigned i) { return uint16_t(i - 1); };
  for (unsigned a = 1; a <= T; ++a)
    for (unsigned b = 1; a + b <= T; ++b) {
      if (a >= 2 * b) continue;
      Relation rel{{1, {gi(a), gi(b)}}};
      for (unsigned j = 0; 2 * j <= a; ++j) {
        if (binom_mod(long(b) - 1 - long(j), long(a) - 2 * long(j), 2) == 0) continue;
        if (j == 0) rel.push_back({1, {gi(a + b)}});
        else rel.push_back({1, {gi(a + b - j), gi(j)}});
      }
      pres.relations.push_back(std::move(rel));
    }
  return pres;
}

/* Adem relations for the truncated mod-p Steenrod algebra (p odd) on
 * beta, P^1..P^m where m = T / (2(p-1)). */
inline Presentation truncated_a_oddp(uint32_t p, unsigned T) {
  Presentation pres;
  pres.p = p;
  pres.truncation = T;
  pres.name = "TruncatedA_" + std::to_string(p) + "_" + std::to_string(T);
  const unsigned q = 2 * (p - 1); // |P^i| = q*i
  const unsigned m = T / q;
  pres.generators.push_back({"b", 1});
  for (unsigned i = 1; i <= m; ++i)
    pres.generators.push_back({"P" + std::to_string(i), q * i});
  auto P = [](unsigned i) { return uint16_t(i); }; // index 0 is beta
  const uint16_t B = 0;
  auto neg = [p](uint32_t c) { return (p - c % p) % p; };
  auto sign = [p, neg](long s, uint32_t c) { return (s % 2 == 0) ? c % p : neg(c); };

  pres.relations.push_back({{1, {B, B}}}); // beta^2 = 0
  // P^a P^b for a < p b
  for (unsigned a = 1; a <= m; ++a)
    for (unsigned b = 1; a + b <= m; ++b) {
      if (a >= p * b) continue;
      Relation rel{{1, {P(a), P(b)}}};
      for (long t = 0; p * t <= long(a); ++t) {
        uint32_t c = binom_mod(long(p - 1) * (long(b) - t) - 1, long(a) - long(p) * t, p);
        if (!c) continue;
        c = sign(long(a) + t + 1, c); // minus the Adem right-hand side
        if (t == 0) rel.push_back({c, {P(a + b)}});
        else rel.push_back({c, {P(a + b - unsigned(t)), P(unsigned(t))}});
      }
      pres.relations.push_back(std::move(rel));
    }
  // P^a beta P^b for a <= p b
  for (unsigned a = 1; a <= m; ++a)
    for (unsigned b = 1; a + b <= m; ++b) {
      if (a > p * b) continue;
      Relation rel{{1, {P(a), B, P(b)}}};
      for (long t = 0; p * t <= long(a); ++t) {
        uint32_t c = binom_mod(long(p - 1) * (long(b) - t), long(a) - long(p) * t, p);
        if (c) {
          c = sign(long(a) + t + 1, c);
          if (t == 0) rel.push_back({c, {B, P(a + b)}});
          else rel.push_back({c, {B, P(a + b - unsigned(t)), P(unsigned(t))}});
        }
      }
      for (long t = 0; p * t <= long(a) - 1; ++t) {
        uint32_t c = binom_mod(long(p - 1) * (long(b) - t) - 1, long(a) - long(p) * t - 1, p);
        if (c) {
          c = sign(long(a) + t, c); // the second sum enters with +(-1)^{a+t-1}, negated
          if (t == 0) rel.push_back({c, {P(a + b)}});
          else rel.push_back({c, {P(a + b - unsigned(t)), B, P(unsigned(t))}});
        }
      }
      pres.relations.push_back(std::move(rel));
    }
  return pres;
}

} // namespace detail

/* Registry names: E1_2, E1_3, E1_5, A1, A2, Atmf3, ExteriorB,
 * TruncatedA_<p>_<T>. */
inline AlgebraPtr builtin(const std::string& name) {
  Presentation pres;
  pres.name = name;
  if (name == "E1_2" || name == "E1_3" || name == "E1_5") {
    uint32_t p = uint32_t(name[3] - '0');
    pres.p = p;
    pres.truncation = 40;
    pres.generators = {{"Q0", 1}, {"Q1", 2 * p - 1}};
    pres.relations = {detail::square(0), detail::square(1),
                      detail::anticommutator(0, 1)};
    return std::make_shared<Algebra>(std::move(pres));
  }
  if (name == "ExteriorB") {
    pres.p = 3;
    pres.truncation = 40;
    pres.generators = {{"x1", 1}, {"x5", 5}, {"x9", 9}};
    pres.relations = {detail::square(0), detail::square(1), detail::square(2),
                      detail::anticommutator(0, 1), detail::anticommutator(0, 2),
                      detail::anticommutator(1, 2)};
    return std::make_shared<Algebra>(std::move(pres));
  }
  if (name == "Atmf3") {
    pres.p = 3;
    pres.truncation = 40;
    pres.generators = {{"b", 1}, {"P1", 4}};
    const uint16_t B = 0, P = 1;
    pres.relations = {
        {{1, {B, B}}},
        {{1, {P, P, P}}},
        // b P P b - (b P)^2 - (P b)^2
        {{1, {B, P, P, B}}, {2, {B, P, B, P}}, {2, {P, B, P, B}}},
    };
    return std::make_shared<Algebra>(std::move(pres));
  }
  if (name == "A1")
    return std::make_shared<Algebra>(detail::subalgebra_of_a2({1, 2}, 9, "A1", 16));
  if (name == "A2")
    return std::make_shared<Algebra>(detail::subalgebra_of_a2({1, 2, 4}, 28, "A2", 32));
  if (name.rfind("TruncatedA_", 0) == 0) {
    auto rest = name.substr(11);
    auto us = rest.find('_');
    if (us != std::string::npos) {
      uint32_t p = uint32_t(std::stoul(rest.substr(0, us)));
      unsigned T = unsigned(std::stoul(rest.substr(us + 1)));
      if (p == 2) return std::make_shared<Algebra>(detail::truncated_a_mod2(T));
      if (fglinalg::is_prime(p))
        return std::make_shared<Algebra>(detail::truncated_a_oddp(p, T));
    }
  }
  throw Error(errc::unknown_algebra, name);
}

} // namespace extforge::steenrod
