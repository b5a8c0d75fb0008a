#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cdgor/error.hpp"
#include "cdgor/poset.hpp"
#include "cdgor/simplicial.hpp"

namespace cdgor {

/// Flag numbers indexed by rank-set bitmask: bit i-1 set iff rank i is in S, for S ⊆ [n].
struct FlagVector {
  int n = 0;
  std::vector<BigInt> values;  // size 2^n

  const BigInt& at(std::uint32_t mask) const { return values.at(mask); }
  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

/// Rank-set bitmask of a list of ranks in [1, n].
inline std::uint32_t rank_mask(std::initializer_list<int> ranks) {
  std::uint32_t m = 0;
  for (int r : ranks) m |= std::uint32_t{1} << (r - 1);
  return m;
}

/// f_S counted by a chain DP over the rank layers in S.
inline FlagVector flag_f(const GradedPoset& p) {
  const int n = p.n();
  if (n < 0) throw Error(ErrorCode::InvalidInput, "flag vector needs rank at least 1");
  if (n > 24) throw Error(ErrorCode::TooLarge, "rank too large for flag enumeration");
  std::vector<std::vector<std::size_t>> layer(static_cast<std::size_t>(n + 1));
  for (int r = 1; r <= n; ++r) layer[static_cast<std::size_t>(r)] = p.indices_at_rank(r);

  FlagVector f{n, std::vector<BigInt>(std::size_t{1} << n)};
  std::vector<BigInt> count(p.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int prev = 0;
    bool first = true;
    for (int r = 1; r <= n; ++r) {
      if (!(mask >> (r - 1) & 1)) continue;
      for (std::size_t e : layer[static_cast<std::size_t>(r)]) {
        if (first) {
          count[e] = 1;
          continue;
        }
        BigInt acc = 0;
        for (std::size_t u : layer[static_cast<std::size_t>(prev)])
          if (p.leq_at(u, e)) acc += count[u];
        count[e] = acc;
      }
      prev = r;
      first = false;
    }
    if (first) {
      f.values[mask] = 1;
    } else {
      BigInt total = 0;
      for (std::size_t e : layer[static_cast<std::size_t>(prev)]) total += count[e];
      f.values[mask] = total;
    }
  }
  return f;
}

/// h_S = Σ_{T⊆S} (-1)^{|S-T|} f_T.
inline FlagVector flag_h(const FlagVector& f) {
  FlagVector h = f;
  // In-place Möbius transform over the subset lattice.
  for (int bit = 0; bit < f.n; ++bit)
    for (std::uint32_t m = 0; m < h.values.size(); ++m)
      if (m >> bit & 1) h.values[m] -= h.values[m ^ (std::uint32_t{1} << bit)];
  return h;
}

/// f_S = Σ_{T⊆S} h_T.
inline FlagVector flag_f_from_h(const FlagVector& h) {
  FlagVector f = h;
  for (int bit = 0; bit < h.n; ++bit)
    for (std::uint32_t m = 0; m < f.values.size(); ++m)
      if (m >> bit & 1) f.values[m] += f.values[m ^ (std::uint32_t{1} << bit)];
  return f;
}

/// Homogeneous polynomial in noncommuting a, b; words have length n.
struct AbPolynomial {
  int n = 0;
  std::map<std::string, BigInt> coeffs;  // zero coefficients never stored

  friend bool operator==(const AbPolynomial&, const AbPolynomial&) = default;
};

/// Ψ: the word u_S has b at positions in S and a elsewhere.
inline AbPolynomial ab_index(const FlagVector& h) {
  AbPolynomial psi{h.n, {}};
  for (std::uint32_t m = 0; m < h.values.size(); ++m) {
    if (h.values[m] == 0) continue;
    std::string w(static_cast<std::size_t>(h.n), 'a');
    for (int i = 0; i < h.n; ++i)
      if (m >> i & 1) w[static_cast<std::size_t>(i)] = 'b';
    psi.coeffs.emplace(std::move(w), h.values[m]);
  }
  return psi;
}

/// Polynomial in noncommuting c (weight 1) and d (weight 2), homogeneous of weight `degree`.
class CdPolynomial {
 public:
  CdPolynomial() = default;
  explicit CdPolynomial(int degree) : degree_(degree) {}

  static CdPolynomial monomial(const std::string& word, BigInt coeff = 1) {
    CdPolynomial p(weight(word));
    p.add(word, coeff);
    return p;
  }

  static int weight(std::string_view word) {
    int w = 0;
    for (char ch : word) {
      if (ch == 'c') w += 1;
      else if (ch == 'd') w += 2;
      else throw Error(ErrorCode::InvalidInput, "cd-word contains a letter other than c or d");
    }
    return w;
  }

  int degree() const { return degree_; }
  const std::map<std::string, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt coeff(const std::string& word) const {
    auto it = coeffs_.find(word);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add(const std::string& word, const BigInt& value) {
    if (weight(word) != degree_) throw Error(ErrorCode::WrongDegree, "term weight differs from polynomial degree");
    if (value == 0) return;
    auto [it, fresh] = coeffs_.emplace(word, value);
    if (!fresh) {
      it->second += value;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  CdPolynomial& operator+=(const CdPolynomial& o) {
    require_same_degree(o);
    for (const auto& [w, k] : o.coeffs_) add(w, k);
    return *this;
  }
  CdPolynomial& operator-=(const CdPolynomial& o) {
    require_same_degree(o);
    for (const auto& [w, k] : o.coeffs_) add(w, -k);
    return *this;
  }
  friend CdPolynomial operator+(CdPolynomial a, const CdPolynomial& b) { return a += b; }
  friend CdPolynomial operator-(CdPolynomial a, const CdPolynomial& b) { return a -= b; }

  friend CdPolynomial operator*(const BigInt& k, const CdPolynomial& p) {
    CdPolynomial out(p.degree_);
    for (const auto& [w, v] : p.coeffs_) out.add(w, k * v);
    return out;
  }

  /// Noncommutative product: words concatenate.
  friend CdPolynomial operator*(const CdPolynomial& a, const CdPolynomial& b) {
    CdPolynomial out(a.degree_ + b.degree_);
    for (const auto& [u, x] : a.coeffs_)
      for (const auto& [v, y] : b.coeffs_) out.add(u + v, x * y);
    return out;
  }

  friend bool operator==(const CdPolynomial&, const CdPolynomial&) = default;

 private:
  void require_same_degree(const CdPolynomial& o) const {
    if (o.degree_ != degree_) throw Error(ErrorCode::WrongDegree, "adding cd-polynomials of different degree");
  }

  int degree_ = 0;
  std::map<std::string, BigInt> coeffs_;
};

inline CdPolynomial cd_c() { return CdPolynomial::monomial("c"); }
inline CdPolynomial cd_d() { return CdPolynomial::monomial("d"); }
inline CdPolynomial cd_one() { return CdPolynomial::monomial(""); }

/// Substitute c -> a+b, d -> ab+ba.
inline AbPolynomial cd_expand(const CdPolynomial& phi) {
  AbPolynomial out{phi.degree(), {}};
  for (const auto& [word, k] : phi.coeffs()) {
    std::vector<std::string> words{""};
    for (char ch : word) {
      std::vector<std::string> next;
      next.reserve(words.size() * 2);
      const std::array<const char*, 2> parts = ch == 'c' ? std::array<const char*, 2>{"a", "b"}
                                                         : std::array<const char*, 2>{"ab", "ba"};
      for (const auto& w : words)
        for (const char* s : parts) next.push_back(w + s);
      words = std::move(next);
    }
    for (auto& w : words) {
      auto [it, fresh] = out.coeffs.emplace(std::move(w), k);
      if (!fresh) {
        it->second += k;
        if (it->second == 0) out.coeffs.erase(it);
      }
    }
  }
  return out;
}

/// Inverse of cd_expand; throws NotCdExpressible outside its image.
inline CdPolynomial cd_rewrite(const AbPolynomial& psi) {
  std::map<std::string, BigInt> rest;
  for (const auto& [w, k] : psi.coeffs) {
    if (static_cast<int>(w.size()) != psi.n) throw Error(ErrorCode::WrongDegree, "ab-word length differs from n");
    if (w.find_first_not_of("ab") != std::string::npos)
      throw Error(ErrorCode::InvalidInput, "ab-word contains a letter other than a or b");
    if (k != 0) rest.emplace(w, k);
  }
  CdPolynomial phi(psi.n);
  while (!rest.empty()) {
    const auto [lead, k] = *rest.begin();
    std::string cd;
    for (std::size_t i = 0; i < lead.size();) {
      if (lead[i] == 'b') throw Error(ErrorCode::NotCdExpressible, "ab-index has no cd form (word " + lead + ")");
      if (i + 1 < lead.size() && lead[i + 1] == 'b') {
        cd += 'd';
        i += 2;
      } else {
        cd += 'c';
        i += 1;
      }
    }
    const CdPolynomial term = CdPolynomial::monomial(cd, k);
    phi += term;
    for (const auto& [w, v] : cd_expand(term).coeffs) {
      auto [it, fresh] = rest.emplace(w, -v);
      if (!fresh) {
        it->second -= v;
        if (it->second == 0) rest.erase(it);
      }
    }
  }
  return phi;
}

inline AbPolynomial ab_index(const GradedPoset& p) { return ab_index(flag_h(flag_f(p))); }

inline CdPolynomial cd_index(const GradedPoset& p) { return cd_rewrite(ab_index(p)); }

/// (δ_0, ..., δ_{⌊n/2⌋}): δ_i totals the coefficients of words with i letters d.
struct DVector {
  std::vector<BigInt> entries;
  friend bool operator==(const DVector&, const DVector&) = default;
};

inline DVector d_vector(const CdPolynomial& phi) {
  DVector out;
  out.entries.assign(static_cast<std::size_t>(std::max(phi.degree(), 0) / 2 + 1), 0);
  for (const auto& [w, k] : phi.coeffs())
    out.entries[static_cast<std::size_t>(std::count(w.begin(), w.end(), 'd'))] += k;
  return out;
}

/// Σ h_i x^i = Σ 2^i δ_i x^i (1+x)^{n-2i}.
inline HVector h_from_d(const DVector& d, int n) {
  if (static_cast<int>(d.entries.size()) != n / 2 + 1)
    throw Error(ErrorCode::WrongDegree, "d-vector length must be floor(n/2)+1");
  GammaVector g;
  for (std::size_t i = 0; i < d.entries.size(); ++i) g.entries.push_back((BigInt(1) << i) * d.entries[i]);
  return h_from_gamma(g, n);
}

struct Rank5Coeffs {
  BigInt a1, a2, a3, a13;
  friend bool operator==(const Rank5Coeffs&, const Rank5Coeffs&) = default;
};

struct Rank6Coeffs {
  BigInt a1, a2, a3, a4, a13, a14, a24;
  friend bool operator==(const Rank6Coeffs&, const Rank6Coeffs&) = default;
};

namespace detail {

inline void require_normalized(const CdPolynomial& phi, int degree) {
  if (phi.degree() != degree)
    throw Error(ErrorCode::WrongDegree, "expected degree " + std::to_string(degree));
  if (phi.coeff(std::string(static_cast<std::size_t>(degree), 'c')) != 1)
    throw Error(ErrorCode::LeadingCoeffNotOne, "coefficient of the pure c-word must be 1");
}

}  // namespace detail

inline Rank5Coeffs rank5_coeffs(const CdPolynomial& phi) {
  detail::require_normalized(phi, 4);
  return {phi.coeff("dcc"), phi.coeff("cdc"), phi.coeff("ccd"), phi.coeff("dd")};
}

inline Rank6Coeffs rank6_coeffs(const CdPolynomial& phi) {
  detail::require_normalized(phi, 5);
  return {phi.coeff("dccc"), phi.coeff("cdcc"), phi.coeff("ccdc"), phi.coeff("cccd"),
          phi.coeff("ddc"),  phi.coeff("dcd"),  phi.coeff("cdd")};
}

inline CdPolynomial from_rank5(const Rank5Coeffs& t) {
  CdPolynomial p(4);
  p.add("cccc", 1);
  p.add("dcc", t.a1);
  p.add("cdc", t.a2);
  p.add("ccd", t.a3);
  p.add("dd", t.a13);
  return p;
}

// ---- text form -------------------------------------------------------------

/// Canonical order: fewer d's first, then lexicographic with d before c.
inline bool cd_word_less(const std::string& u, const std::string& v) {
  const auto du = std::count(u.begin(), u.end(), 'd');
  const auto dv = std::count(v.begin(), v.end(), 'd');
  if (du != dv) return du < dv;
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                      [](char x, char y) { return (x == 'd' ? 0 : 1) < (y == 'd' ? 0 : 1); });
}

/// Run-length form: "ccd" -> "c^2d".
inline std::string cd_word_to_string(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Terms `k*w` in canonical order; the empty word prints as the bare coefficient; zero prints as "0".
inline std::string to_string(const CdPolynomial& phi) {
  std::vector<std::pair<std::string, BigInt>> terms(phi.coeffs().begin(), phi.coeffs().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return cd_word_less(x.first, y.first); });
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, k] : terms) {
    const bool neg = k < 0;
    const BigInt mag = neg ? BigInt(-k) : k;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += mag.str();
    if (!w.empty()) out += "*" + cd_word_to_string(w);
    first = false;
  }
  return out;
}

/// Parses the text form; a term may omit "k*" (coefficient 1). Degree is taken from the terms.
inline CdPolynomial parse_cd(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, why + " at offset " + std::to_string(i));
  };
  auto number = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  std::vector<std::pair<std::string, BigInt>> terms;
  skip();
  if (text.substr(i) == "0") return CdPolynomial(0);
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first) throw fail("empty polynomial");
      break;
    }
    int sign = 1;
    if (!first) {
      if (text[i] == '+') ++i;
      else if (text[i] == '-') sign = -1, ++i;
      else throw fail("expected + or -");
      skip();
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
      skip();
    }
    BigInt k = 1;
    std::string digits = number();
    skip();
    std::string word;
    bool need_word = digits.empty();
    if (!digits.empty()) {
      k = BigInt(digits);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        need_word = true;
      }
    }
    if (need_word) {
      if (i >= text.size() || (text[i] != 'c' && text[i] != 'd')) throw fail("expected a cd-word");
      while (i < text.size() && (text[i] == 'c' || text[i] == 'd')) {
        const char letter = text[i++];
        std::size_t reps = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          const std::string e = number();
          if (e.empty()) throw fail("expected exponent");
          reps = std::stoul(e);
          if (reps == 0) throw fail("zero exponent");
        }
        word.append(reps, letter);
      }
    }
    terms.emplace_back(std::move(word), sign * k);
    first = false;
  }
  CdPolynomial phi(CdPolynomial::weight(terms.front().first));
  for (const auto& [w, k] : terms) phi.add(w, k);
  return phi;
}

}  // namespace cdgor
