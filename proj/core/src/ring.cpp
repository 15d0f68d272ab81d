#include "edmf/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace edmf {

namespace {

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string without_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Parses an unsigned decimal and reduces it modulo p.
gfpoly::Coeff parse_coeff_mod(std::string_view digits, gfpoly::Coeff p) {
  std::uint64_t acc = 0;
  for (char c : digits) acc = (acc * 10 + static_cast<unsigned>(c - '0')) % p;
  return static_cast<gfpoly::Coeff>(acc);
}

gfpoly::Poly parse_polynomial(std::string_view text, gfpoly::Coeff p) {
  const std::string s = without_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  gfpoly::Poly acc;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
    }
    first = false;

    const std::size_t digits_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    const std::string_view digits(s.data() + digits_begin, i - digits_begin);
    gfpoly::Coeff coeff = digits.empty() ? 1 : parse_coeff_mod(digits, p);

    unsigned exponent = 0;
    bool has_x = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw ParseError("dangling '*' in polynomial '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != 'x') throw ParseError("expected 'x' after '*' in '" + s + "'");
    }
    if (i < s.size() && s[i] == 'x') {
      has_x = true;
      exponent = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::size_t e_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e_begin == i) throw ParseError("missing exponent in polynomial '" + s + "'");
        unsigned e = 0;
        auto [ptr, ec] = std::from_chars(s.data() + e_begin, s.data() + i, e);
        if (ec != std::errc() || e > 100000) throw ParseError("bad exponent in '" + s + "'");
        exponent = e;
      }
    }
    if (digits.empty() && !has_x) throw ParseError("malformed term in polynomial '" + s + "'");

    if (negative) coeff = coeff == 0 ? 0 : p - coeff;
    gfpoly::Poly term(exponent + 1, 0);
    term[exponent] = coeff;
    gfpoly::trim(term);
    acc = gfpoly::add(acc, term, p);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

Ring Ring::polynomials(std::uint32_t p) {
  if (p >= (1u << 31) || !is_small_prime(p))
    throw ParseError("GF(p)[x] requires a prime p < 2^31, got " + std::to_string(p));
  Ring r;
  r.kind_ = RingKind::GaloisPolynomials;
  r.p_ = p;
  return r;
}

Ring Ring::parse(std::string_view text) {
  const std::string s = without_spaces(text);
  if (s == "Z") return integers();
  constexpr std::string_view prefix = "GF(";
  constexpr std::string_view suffix = ")[x]";
  if (s.size() > prefix.size() + suffix.size() && s.starts_with(prefix) && s.ends_with(suffix)) {
    const std::string_view digits(s.data() + prefix.size(), s.size() - prefix.size() - suffix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && p < (1ull << 31))
      return polynomials(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown ring declaration '" + std::string(text) + "' (expected Z or GF(p)[x])");
}

std::string Ring::to_string() const {
  if (is_integers()) return "Z";
  return "GF(" + std::to_string(p_) + ")[x]";
}

Element Ring::zero() const {
  if (is_integers()) return Element(*this, mpz_class(0));
  return Element(*this, gfpoly::Poly{});
}

Element Ring::one() const { return from_int(1); }

Element Ring::from_int(long value) const {
  if (is_integers()) return Element(*this, mpz_class(value));
  return Element(*this, gfpoly::Poly{gfpoly::reduce(value, p_)});
}

Element Ring::variable() const {
  if (is_integers()) throw PreconditionError("Z has no polynomial variable");
  return Element(*this, gfpoly::Poly{0, 1});
}

Element Ring::parse_element(std::string_view text) const {
  const std::string_view s = strip(text);
  if (is_integers()) {
    std::string digits = without_spaces(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const bool ok = !digits.empty() &&
                    std::all_of(digits.begin() + (digits.front() == '-' ? 1 : 0), digits.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                    digits != "-";
    if (!ok) throw ParseError("not an integer: '" + std::string(text) + "'");
    return Element(*this, mpz_class(digits, 10));
  }
  return Element(*this, parse_polynomial(s, p_));
}

std::ostream& operator<<(std::ostream& os, const Ring& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Element

Element::Element(const Ring& ring, mpz_class value) : ring_(ring), z_(std::move(value)) {
  if (!ring.is_integers()) throw MixedRingError("integer payload for " + ring.to_string());
}

Element::Element(const Ring& ring, gfpoly::Poly coeffs) : ring_(ring), poly_(std::move(coeffs)) {
  if (ring.is_integers()) throw MixedRingError("polynomial payload for Z");
  const auto p = ring.characteristic();
  for (auto& c : poly_) c %= p;
  gfpoly::trim(poly_);
}

bool Element::is_zero() const { return ring_.is_integers() ? sgn(z_) == 0 : poly_.empty(); }

bool Element::is_one() const {
  return ring_.is_integers() ? z_ == 1 : (poly_.size() == 1 && poly_[0] == 1);
}

bool Element::is_unit() const {
  return ring_.is_integers() ? (z_ == 1 || z_ == -1) : poly_.size() == 1;
}

const mpz_class& Element::integer() const {
  if (!ring_.is_integers()) throw MixedRingError("integer() on a polynomial element");
  return z_;
}

const gfpoly::Poly& Element::coefficients() const {
  if (ring_.is_integers()) throw MixedRingError("coefficients() on an integer element");
  return poly_;
}

int Element::degree() const {
  if (ring_.is_integers()) throw MixedRingError("degree() on an integer element");
  return gfpoly::degree(poly_);
}

Element Element::operator-() const {
  if (ring_.is_integers()) return Element(ring_, mpz_class(-z_));
  return Element(ring_, gfpoly::neg(poly_, ring_.characteristic()));
}

Element& Element::operator+=(const Element& b) {
  require_same_ring(*this, b);
  if (ring_.is_integers())
    z_ += b.z_;
  else
    poly_ = gfpoly::add(poly_, b.poly_, ring_.characteristic());
  return *this;
}

Element& Element::operator-=(const Element& b) {
  require_same_ring(*this, b);
  if (ring_.is_integers())
    z_ -= b.z_;
  else
    poly_ = gfpoly::sub(poly_, b.poly_, ring_.characteristic());
  return *this;
}

Element& Element::operator*=(const Element& b) {
  require_same_ring(*this, b);
  if (ring_.is_integers())
    z_ *= b.z_;
  else
    poly_ = gfpoly::mul(poly_, b.poly_, ring_.characteristic());
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.ring_ != b.ring_) return false;
  return a.ring_.is_integers() ? a.z_ == b.z_ : a.poly_ == b.poly_;
}

std::string Element::to_string() const {
  if (ring_.is_integers()) return z_.get_str();
  if (poly_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = poly_.size(); k-- > 0;) {
    const auto c = poly_[k];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring() != b.ring())
    throw MixedRingError("mixed ring instances: " + a.ring().to_string() + " and " +
                         b.ring().to_string());
}

// ---------------------------------------------------------------------------
// Normal forms

CanonicalAssociate normalize(const Element& a) {
  const Ring& r = a.ring();
  if (a.is_zero()) return {a, r.one()};
  if (r.is_integers()) {
    if (sgn(a.integer()) < 0) return {-a, r.from_int(-1)};
    return {a, r.one()};
  }
  const auto p = r.characteristic();
  const auto inv = gfpoly::mod_inverse(a.coefficients().back(), p);
  Element unit(r, gfpoly::Poly{inv});
  return {Element(r, gfpoly::scale(a.coefficients(), inv, p)), unit};
}

bool is_canonical(const Element& a) {
  if (a.ring().is_integers()) return sgn(a.integer()) >= 0;
  return a.is_zero() || a.coefficients().back() == 1;
}

Element unit_inverse(const Element& u) {
  if (!u.is_unit()) throw DivisionError(u.to_string() + " is not a unit");
  if (u.ring().is_integers()) return u;
  const auto p = u.ring().characteristic();
  return Element(u.ring(), gfpoly::Poly{gfpoly::mod_inverse(u.coefficients()[0], p)});
}

DivMod divmod(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DivisionError("division by zero");
  const Ring& r = a.ring();
  if (r.is_integers()) {
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return {Element(r, std::move(q)), Element(r, std::move(rem))};
  }
  auto [q, rem] = gfpoly::divmod(a.coefficients(), b.coefficients(), r.characteristic());
  return {Element(r, std::move(q)), Element(r, std::move(rem))};
}

bool divides(const Element& b, const Element& a) {
  require_same_ring(a, b);
  if (b.is_zero()) return a.is_zero();
  if (a.ring().is_integers()) return mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t()) != 0;
  return divmod(a, b).remainder.is_zero();
}

Element exact_div(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DivisionError("division by zero");
  if (a.ring().is_integers()) {
    if (!mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t()))
      throw DivisionError(b.to_string() + " does not divide " + a.to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return Element(a.ring(), std::move(q));
  }
  auto [q, rem] = divmod(a, b);
  if (!rem.is_zero()) throw DivisionError(b.to_string() + " does not divide " + a.to_string());
  return q;
}

BezoutCertificate gcd_bezout(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  if (r.is_integers()) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.integer().get_mpz_t(),
               b.integer().get_mpz_t());
    return {Element(r, std::move(g)), Element(r, std::move(s)), Element(r, std::move(t))};
  }
  // Extended Euclid; invariant: old_r = old_s*a + old_t*b.
  Element old_r = a, cur_r = b;
  Element old_s = r.one(), cur_s = r.zero();
  Element old_t = r.zero(), cur_t = r.one();
  while (!cur_r.is_zero()) {
    auto [q, rem] = divmod(old_r, cur_r);
    old_r = std::exchange(cur_r, std::move(rem));
    old_s = std::exchange(cur_s, old_s - q * cur_s);
    old_t = std::exchange(cur_t, old_t - q * cur_t);
  }
  auto [g, unit] = normalize(old_r);
  return {std::move(g), unit * old_s, unit * old_t};
}

Element gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.ring().is_integers()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return Element(a.ring(), std::move(g));
  }
  Element x = a, y = b;
  while (!y.is_zero()) x = std::exchange(y, divmod(x, y).remainder);
  return canonical(x);
}

Element lcm(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return a.ring().zero();
  return canonical(exact_div(a * b, gcd(a, b)));
}

Element pow(const Element& a, unsigned exponent) {
  Element result = a.ring().one();
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

int compare_size(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.ring().is_integers()) {
    const int c = mpz_cmpabs(a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return (c > 0) - (c < 0);
  }
  const int da = a.degree(), db = b.degree();
  return (da > db) - (da < db);
}

std::strong_ordering canonical_order(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.ring().is_integers()) {
    const int c = mpz_cmpabs(a.integer().get_mpz_t(), b.integer().get_mpz_t());
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const int s = cmp(a.integer(), b.integer());
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return gfpoly::compare(a.coefficients(), b.coefficients()) <=> 0;
}

std::vector<Element> small_elements(const Ring& ring, unsigned level) {
  std::vector<Element> out;
  if (ring.is_integers()) {
    out.push_back(ring.zero());
    for (long k = 1; k <= static_cast<long>(level); ++k) {
      out.push_back(ring.from_int(k));
      out.push_back(ring.from_int(-k));
    }
    return out;
  }
  const auto p = ring.characteristic();
  // All coefficient vectors of length `level`, counted in base p.
  gfpoly::Poly digits(level, 0);
  while (true) {
    out.emplace_back(ring, digits);
    std::size_t k = 0;
    while (k < level && ++digits[k] == p) digits[k++] = 0;
    if (k == level) break;
  }
  return out;
}

}  // namespace edmf
