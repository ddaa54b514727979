#include "epspoly.hpp"

#include <cctype>
#include <stdexcept>

namespace gsd {

void EpsPoly::normalize() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

EpsPoly EpsPoly::monomial(const mpq_class& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("exponents must be nonnegative");
  EpsPoly p;
  if (c != 0) {
    p.coeff_.assign(exponent + 1, 0);
    p.coeff_[exponent] = c;
  }
  return p;
}

std::optional<long> EpsPoly::valuation() const {
  for (std::size_t k = 0; k < coeff_.size(); ++k)
    if (coeff_[k] != 0) return static_cast<long>(k);
  return std::nullopt;
}

const mpq_class& EpsPoly::coeff(int exponent) const {
  static const mpq_class zero = 0;
  if (exponent < 0 || exponent >= static_cast<int>(coeff_.size())) return zero;
  return coeff_[exponent];
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
  EpsPoly out;
  out.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), 0);
  for (std::size_t k = 0; k < out.coeff_.size(); ++k) {
    if (k < coeff_.size()) out.coeff_[k] += coeff_[k];
    if (k < o.coeff_.size()) out.coeff_[k] += o.coeff_[k];
  }
  out.normalize();
  return out;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly out = *this;
  for (auto& c : out.coeff_) c = -c;
  return out;
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const { return *this + (-o); }

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
  EpsPoly out;
  if (is_zero() || o.is_zero()) return out;
  out.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, 0);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeff_.size(); ++j)
      if (o.coeff_[j] != 0) out.coeff_[i + j] += coeff_[i] * o.coeff_[j];
  }
  out.normalize();
  return out;
}

EpsPoly EpsPoly::div_exact(const EpsPoly& o) const {
  if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return EpsPoly();
  EpsPoly rem = *this;
  EpsPoly quo;
  int dn = rem.degree(), dd = o.degree();
  if (dn < dd) throw std::domain_error("inexact polynomial division");
  quo.coeff_.assign(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    mpq_class c = rem.coeff(dd + k) / o.coeff_[dd];
    quo.coeff_[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem.coeff_[j + k] -= c * o.coeff_[j];
  }
  rem.normalize();
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  quo.normalize();
  return quo;
}

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

EpsPoly EpsPoly::parse(std::string_view text) {
  EpsPoly out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms");
    }
    skip_ws();
    // Coefficient (optional when the term starts with 'e').
    mpq_class c = 1;
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (pos > start) c = parse_rational(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    int exponent = 0;
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == es) throw std::invalid_argument("missing exponent after ^");
        exponent = std::stoi(std::string(text.substr(es, pos - es)));
      }
    } else if (pos == start) {
      throw std::invalid_argument("expected a coefficient or e-term");
    }
    out = out + monomial(sign * c, exponent);
    skip_ws();
    first = false;
  }
  return out;
}

std::string EpsPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == 0) continue;
    mpq_class c = coeff_[k];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (k == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += "e";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

EpsPoly det_eps(std::vector<std::vector<EpsPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return EpsPoly(mpq_class(1));
  EpsPoly prev(mpq_class(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return EpsPoly();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]).div_exact(prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace gsd
