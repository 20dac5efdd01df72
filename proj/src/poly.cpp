#include "szb/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace szb {

namespace {

void require_nvars(const MultiPoly& p, const Exponent& exp) {
  if (static_cast<int>(exp.size()) != p.nvars())
    throw std::invalid_argument("exponent length does not match nvars");
}

int exp_total(const Exponent& e) {
  int t = 0;
  for (int b : e) t += b;
  return t;
}

// dense 1-var coefficient helpers used by the Cayley substitutions

std::vector<Complex> conv(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (c0 + c1 z)^k by repeated convolution; exact binomial structure at desk scale
std::vector<Complex> linear_power(Complex c0, Complex c1, int k) {
  std::vector<Complex> out{Complex(1.0, 0.0)};
  std::vector<Complex> lin{c0, c1};
  for (int t = 0; t < k; ++t) out = conv(out, lin);
  return out;
}

Complex int_power(Complex z, int k) {
  Complex out(1.0, 0.0);
  for (int t = 0; t < k; ++t) out *= z;
  return out;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
}

MultiPoly MultiPoly::constant(int nvars, Complex value) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int j) {
  if (j < 0 || j >= nvars) throw std::invalid_argument("variable index out of range");
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e[j] = 1;
  p.add_term(e, Complex(1.0, 0.0));
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponent exp, Complex coeff) {
  MultiPoly p(nvars);
  p.add_term(std::move(exp), coeff);
  return p;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
  return d;
}

int MultiPoly::degree_in(int j) const {
  if (j < 0 || j >= nvars_) throw std::invalid_argument("variable index out of range");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[j]);
  return d;
}

std::pair<int, int> MultiPoly::bidegree() const {
  if (nvars_ != 2) throw std::invalid_argument("bidegree requires nvars == 2");
  return {degree_in(0), degree_in(1)};
}

Complex MultiPoly::coeff(const Exponent& exp) const {
  require_nvars(*this, exp);
  auto it = terms_.find(exp);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void MultiPoly::add_term(const Exponent& exp, Complex coeff) {
  require_nvars(*this, exp);
  for (int b : exp)
    if (b < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= kCanonicalZeroTol) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(Complex scalar) {
  if (std::abs(scalar) <= kCanonicalZeroTol) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  std::erase_if(terms_, [](const auto& t) { return std::abs(t.second) <= kCanonicalZeroTol; });
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.nvars_ != rhs.nvars_) throw std::invalid_argument("nvars mismatch");
  MultiPoly out(lhs.nvars_);
  Exponent e(lhs.nvars_);
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int k = 0; k < lhs.nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::negate() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

const MultiPoly* HomogeneousExpansion::part(int degree) const {
  for (const auto& [d, p] : parts)
    if (d == degree) return &p;
  return nullptr;
}

Complex evaluate(const MultiPoly& p, std::span<const Complex> z) {
  if (static_cast<int>(z.size()) != p.nvars())
    throw std::invalid_argument("point dimension does not match nvars");
  // per-variable power tables keep the summation order strictly lexicographic
  std::vector<std::vector<Complex>> pow(p.nvars());
  for (int j = 0; j < p.nvars(); ++j) {
    int d = p.degree_in(j);
    pow[j].resize(d + 1);
    pow[j][0] = Complex(1.0, 0.0);
    for (int k = 1; k <= d; ++k) pow[j][k] = pow[j][k - 1] * z[j];
  }
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) {
    Complex term = c;
    for (int j = 0; j < p.nvars(); ++j) term *= pow[j][e[j]];
    acc += term;
  }
  return acc;
}

MultiPoly partial_derivative(const MultiPoly& p, int j) {
  if (j < 0 || j >= p.nvars()) throw std::invalid_argument("variable index out of range");
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[j] == 0) continue;
    Exponent d = e;
    d[j] -= 1;
    out.add_term(d, c * static_cast<double>(e[j]));
  }
  return out;
}

std::vector<Complex> gradient_at_zero(const MultiPoly& p) {
  std::vector<Complex> g(p.nvars(), Complex(0.0, 0.0));
  Exponent e(p.nvars(), 0);
  for (int j = 0; j < p.nvars(); ++j) {
    e[j] = 1;
    g[j] = p.coeff(e);
    e[j] = 0;
  }
  return g;
}

Eigen::MatrixXcd hessian_at_zero(const MultiPoly& p) {
  const int n = p.nvars();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  Exponent e(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      e[j] += 1;
      e[k] += 1;
      Complex a = p.coeff(e);
      h(j, k) = (j == k) ? 2.0 * a : a;
      e[j] = 0;
      e[k] = 0;
    }
  return h;
}

HomogeneousExpansion homogeneous_parts(const MultiPoly& p, double zero_tol) {
  if (p.is_zero()) throw std::invalid_argument("homogeneous_parts: zero polynomial");
  std::map<int, MultiPoly> grouped;
  for (const auto& [e, c] : p.terms()) {
    int d = exp_total(e);
    auto it = grouped.find(d);
    if (it == grouped.end()) it = grouped.emplace(d, MultiPoly(p.nvars())).first;
    it->second.add_term(e, c);
  }
  HomogeneousExpansion h;
  h.nvars = p.nvars();
  for (auto& [d, part] : grouped) {
    double biggest = 0.0;
    for (const auto& [e, c] : part.terms()) biggest = std::max(biggest, std::abs(c));
    if (biggest <= zero_tol) continue;  // noise-only part
    h.parts.emplace_back(d, std::move(part));
  }
  if (h.parts.empty()) throw std::invalid_argument("homogeneous_parts: zero polynomial");
  h.vanishing_order = h.parts.front().first;
  return h;
}

std::pair<Complex, std::vector<Complex>> homog_data_at_ones(const HomogeneousExpansion& h,
                                                            int degree) {
  Complex value(0.0, 0.0);
  std::vector<Complex> grad(h.nvars, Complex(0.0, 0.0));
  const MultiPoly* part = h.part(degree);
  if (part == nullptr) return {value, grad};
  for (const auto& [e, c] : part->terms()) {
    value += c;
    for (int k = 0; k < h.nvars; ++k) grad[k] += static_cast<double>(e[k]) * c;
  }
  return {value, grad};
}

MultiPoly restrict_to_plane(const MultiPoly& p, std::span<const Complex> u,
                            std::span<const Complex> v) {
  if (static_cast<int>(u.size()) != p.nvars() || static_cast<int>(v.size()) != p.nvars())
    throw std::invalid_argument("direction dimension does not match nvars");
  MultiPoly out(2);
  for (const auto& [e, c] : p.terms()) {
    // expand prod_k (u_k w1 + v_k w2)^{e_k}
    MultiPoly term = MultiPoly::constant(2, c);
    for (int k = 0; k < p.nvars(); ++k) {
      if (e[k] == 0) continue;
      MultiPoly lin(2);
      lin.add_term({1, 0}, u[k]);
      lin.add_term({0, 1}, v[k]);
      for (int t = 0; t < e[k]; ++t) term = term * lin;
    }
    out += term;
  }
  return out;
}

MultiPoly cayley_substitute(const MultiPoly& p, int n, int m, bool allow_padded_bidegree) {
  if (p.nvars() != 2) throw std::invalid_argument("cayley_substitute requires nvars == 2");
  auto [dn, dm] = p.bidegree();
  if (n < dn || m < dm)
    throw std::invalid_argument("declared bidegree below the actual degree");
  if (!allow_padded_bidegree && (n != dn || m != dm))
    throw std::invalid_argument(
        "declared bidegree exceeds the actual degree (pass allow_padded_bidegree to "
        "keep a fixed convention)");

  const Complex i(0.0, 1.0);
  const Complex scale_denominator = int_power(2.0 * i, n + m);
  MultiPoly out(2);
  for (const auto& [e, c] : p.terms()) {
    const int a = e[0], b = e[1];
    // i^{a+b} (1+z1)^a (1-z1)^{n-a} (1+z2)^b (1-z2)^{m-b} / (2i)^{n+m}
    Complex scale = c * int_power(i, a + b) / scale_denominator;
    auto z1 = conv(linear_power(1.0, 1.0, a), linear_power(1.0, -1.0, n - a));
    auto z2 = conv(linear_power(1.0, 1.0, b), linear_power(1.0, -1.0, m - b));
    for (std::size_t s = 0; s < z1.size(); ++s)
      for (std::size_t t = 0; t < z2.size(); ++t)
        out.add_term({static_cast<int>(s), static_cast<int>(t)}, scale * z1[s] * z2[t]);
  }
  return out;
}

MultiPoly cayley_substitute(const MultiPoly& p) {
  auto [n, m] = p.bidegree();
  return cayley_substitute(p, n, m, false);
}

MultiPoly inverse_cayley_substitute(const MultiPoly& q, int n, int m) {
  if (q.nvars() != 2) throw std::invalid_argument("inverse_cayley_substitute requires nvars == 2");
  auto [dn, dm] = q.bidegree();
  if (n < dn || m < dm)
    throw std::invalid_argument("declared bidegree below the actual degree");

  const Complex i(0.0, 1.0);
  MultiPoly out(2);
  for (const auto& [e, c] : q.terms()) {
    const int a = e[0], b = e[1];
    // (z1-i)^a (z1+i)^{n-a} (z2-i)^b (z2+i)^{m-b}
    auto z1 = conv(linear_power(-i, 1.0, a), linear_power(i, 1.0, n - a));
    auto z2 = conv(linear_power(-i, 1.0, b), linear_power(i, 1.0, m - b));
    for (std::size_t s = 0; s < z1.size(); ++s)
      for (std::size_t t = 0; t < z2.size(); ++t)
        out.add_term({static_cast<int>(s), static_cast<int>(t)}, c * z1[s] * z2[t]);
  }
  return out;
}

}  // namespace szb
