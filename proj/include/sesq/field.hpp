#pragma once

// Exact scalar fields: F_p, F_{p^n} (as F_p[x]/(m)) and Q.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sesq/error.hpp"

namespace sesq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Extension, Rational };

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients low-to-high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint32_t>((t % static_cast<std::int64_t>(p) + p) % p);
}

// Remainder of a modulo b (b nonzero).
inline Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  poly_trim(a);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * b[i]) % p);
    }
    poly_trim(a);
  }
  return a;
}

// Exhaustive search for a monic factor of degree 1..deg/2.
inline bool poly_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (poly_rem(m, f, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field;

/// Shared, immutable description of a field. Elements point back at it.
class FieldImpl {
 public:
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;       // characteristic (0 for Q)
  std::uint32_t degree = 1;  // [F : F_p]
  detail::Poly modulus;      // monic, degree+1 coefficients (extensions only)
  std::uint64_t order = 0;   // 0 means infinite

  bool same_as(const FieldImpl& o) const {
    return this == &o ||
           (kind == o.kind && p == o.p && degree == o.degree && modulus == o.modulus);
  }

  // Finite-field arithmetic on element indices (index = sum c_i p^i).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (kind == FieldKind::Prime) {
      std::uint64_t s = std::uint64_t(a) + b;
      return static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    if (!add_table.empty()) return add_table[a * order + b];
    return encode(add_digits(decode(a), decode(b)));
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (kind == FieldKind::Prime) return a == 0 ? 0 : p - a;
    auto d = decode(a);
    for (auto& c : d) c = c == 0 ? 0 : p - c;
    return encode(d);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (kind == FieldKind::Prime)
      return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
    if (!mul_table.empty()) return mul_table[a * order + b];
    return encode(mul_digits(decode(a), decode(b)));
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero);
    if (kind == FieldKind::Prime) return detail::inv_mod(a, p);
    if (!inv_table.empty()) return inv_table[a];
    // a^(q-2)
    std::uint64_t e = order - 2;
    std::uint32_t result = 1, base = a;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  std::vector<std::uint32_t> decode(std::uint32_t a) const {
    std::vector<std::uint32_t> d(degree, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return static_cast<std::uint32_t>(code);
  }

  void build_tables() {
    if (kind != FieldKind::Extension || order > 1024) return;
    const auto q = static_cast<std::uint32_t>(order);
    std::vector<std::uint32_t> add_t(std::size_t(q) * q), mul_t(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      auto da = decode(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        auto db = decode(b);
        add_t[std::size_t(a) * q + b] = encode(add_digits(da, db));
        mul_t[std::size_t(a) * q + b] = encode(mul_digits(da, db));
      }
    }
    add_table = std::move(add_t);
    mul_table = std::move(mul_t);
    inv_table.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b)
        if (mul_table[std::size_t(a) * q + b] == 1) {
          inv_table[a] = b;
          break;
        }
  }

 private:
  std::vector<std::uint32_t> add_table, mul_table, inv_table;

  std::vector<std::uint32_t> add_digits(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> r(degree);
    for (std::uint32_t i = 0; i < degree; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  std::vector<std::uint32_t> mul_digits(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) const {
    detail::Poly prod(2 * degree, 0);
    for (std::uint32_t i = 0; i < degree; ++i)
      for (std::uint32_t j = 0; j < degree; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    auto r = detail::poly_rem(prod, modulus, p);
    r.resize(degree, 0);
    return r;
  }
};

/// A field element. Holds a raw pointer to its field, so the owning
/// `Field` (or a container that holds one) must outlive it.
class Elem {
 public:
  Elem() = default;
  Elem(const FieldImpl* f, std::uint32_t code) : f_(f), v_(code) {}
  Elem(const FieldImpl* f, Rational q) : f_(f), v_(std::move(q)) {}

  const FieldImpl* field() const { return f_; }
  bool finite() const { return std::holds_alternative<std::uint32_t>(v_); }

  /// Position in the canonical enumeration of a finite field.
  std::uint32_t index() const { return std::get<std::uint32_t>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }

  bool is_zero() const {
    return finite() ? index() == 0 : rational() == 0;
  }
  bool is_one() const {
    return finite() ? index() == 1 : rational() == 1;
  }

  friend Elem operator+(const Elem& a, const Elem& b) {
    check(a, b);
    if (a.finite()) return {a.f_, a.f_->add(a.index(), b.index())};
    return {a.f_, Rational(a.rational() + b.rational())};
  }
  friend Elem operator-(const Elem& a) {
    if (a.finite()) return {a.f_, a.f_->neg(a.index())};
    return {a.f_, Rational(-a.rational())};
  }
  friend Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }
  friend Elem operator*(const Elem& a, const Elem& b) {
    check(a, b);
    if (a.finite()) return {a.f_, a.f_->mul(a.index(), b.index())};
    return {a.f_, Rational(a.rational() * b.rational())};
  }
  Elem inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero);
    if (finite()) return {f_, f_->inv(index())};
    return {f_, Rational(1 / rational())};
  }
  friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inv(); }
  Elem& operator+=(const Elem& b) { return *this = *this + b; }
  Elem& operator-=(const Elem& b) { return *this = *this - b; }
  Elem& operator*=(const Elem& b) { return *this = *this * b; }

  Elem pow(std::uint64_t e) const {
    Elem result = f_->kind == FieldKind::Rational ? Elem(f_, Rational(1)) : Elem(f_, 1u);
    Elem base = *this;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Elem& a, const Elem& b) {
    check(a, b);
    return a.v_ == b.v_;
  }

  std::string to_string() const {
    if (!finite()) return rational().str();
    if (f_->kind == FieldKind::Prime) return std::to_string(index());
    auto d = f_->decode(index());
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
      if (i >= 1) out += "a";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  const FieldImpl* f_ = nullptr;
  std::variant<std::uint32_t, Rational> v_{std::uint32_t{0}};

  static void check(const Elem& a, const Elem& b) {
    if (a.f_ != b.f_ && (!a.f_ || !b.f_ || !a.f_->same_as(*b.f_)))
      throw Error(ErrorKind::ContextMismatch);
  }
};

/// Cheap-to-copy handle on a shared FieldImpl.
class Field {
 public:
  Field() : Field(rational()) {}

  static Field prime(std::uint64_t p) {
    if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
    if (p >= (1ull << 31)) throw Error(ErrorKind::BadDescriptor, "prime too large");
    auto impl = std::make_shared<FieldImpl>();
    impl->kind = FieldKind::Prime;
    impl->p = static_cast<std::uint32_t>(p);
    impl->order = p;
    return Field(std::move(impl));
  }

  /// F_p[x]/(modulus); `modulus` is given low-to-high, reduced mod p, and
  /// must be monic of degree >= 1 and irreducible.
  static Field extension(std::uint64_t p, const std::vector<std::int64_t>& modulus) {
    if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
    detail::Poly m;
    for (auto c : modulus) {
      auto r = c % static_cast<std::int64_t>(p);
      if (r < 0) r += static_cast<std::int64_t>(p);
      m.push_back(static_cast<std::uint32_t>(r));
    }
    if (m.size() < 2 || m.back() != 1)
      throw Error(ErrorKind::BadDescriptor, "modulus must be monic of degree >= 1");
    const auto deg = static_cast<std::uint32_t>(m.size() - 1);
    long double order = 1;
    for (std::uint32_t i = 0; i < deg; ++i) order *= static_cast<long double>(p);
    if (order > 4.0e9L) throw Error(ErrorKind::BadDescriptor, "field too large");
    if (!detail::poly_irreducible(m, static_cast<std::uint32_t>(p)))
      throw Error(ErrorKind::ReducibleModulus);
    if (deg == 1) return prime(p);
    auto impl = std::make_shared<FieldImpl>();
    impl->kind = FieldKind::Extension;
    impl->p = static_cast<std::uint32_t>(p);
    impl->degree = deg;
    impl->modulus = std::move(m);
    impl->order = static_cast<std::uint64_t>(order);
    impl->build_tables();
    return Field(std::move(impl));
  }

  /// F_{p^d} with the first monic irreducible modulus in canonical order.
  static Field extension_of_degree(std::uint64_t p, std::uint32_t d) {
    if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
    if (d == 1) return prime(p);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      detail::Poly m(d + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        m[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      m[d] = 1;
      if (detail::poly_irreducible(m, static_cast<std::uint32_t>(p)))
        return extension(p, std::vector<std::int64_t>(m.begin(), m.end()));
    }
    throw Error(ErrorKind::BadDescriptor, "no irreducible polynomial");  // unreachable
  }

  static Field rational() {
    static const auto impl = [] {
      auto f = std::make_shared<FieldImpl>();
      f->kind = FieldKind::Rational;
      return f;
    }();
    return Field(impl);
  }

  FieldKind kind() const { return impl_->kind; }
  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->degree; }
  std::uint64_t order() const { return impl_->order; }
  bool finite() const { return impl_->kind != FieldKind::Rational; }
  const detail::Poly& modulus() const { return impl_->modulus; }
  const FieldImpl* impl() const { return impl_.get(); }

  Elem zero() const { return finite() ? Elem(impl(), 0u) : Elem(impl(), Rational(0)); }
  Elem one() const { return finite() ? Elem(impl(), 1u) : Elem(impl(), Rational(1)); }

  /// Image of an integer under Z -> F.
  Elem from_int(const BigInt& n) const {
    if (!finite()) return Elem(impl(), Rational(n));
    BigInt r = n % impl_->p;
    if (r < 0) r += impl_->p;
    return Elem(impl(), static_cast<std::uint32_t>(r));
  }
  Elem from_rational(const Rational& q) const {
    if (!finite()) return Elem(impl(), q);
    return from_int(boost::multiprecision::numerator(q)) /
           from_int(boost::multiprecision::denominator(q));
  }
  /// Extension element from coefficients on 1, a, a^2, ... (reduced mod p).
  Elem from_coeffs(const std::vector<BigInt>& coeffs) const {
    if (kind() == FieldKind::Rational || coeffs.size() > degree())
      throw Error(ErrorKind::BadDescriptor, "coefficient vector does not fit field");
    std::vector<std::uint32_t> d(degree(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      BigInt r = coeffs[i] % impl_->p;
      if (r < 0) r += impl_->p;
      d[i] = static_cast<std::uint32_t>(r);
    }
    return Elem(impl(), impl_->encode(d));
  }
  /// The element at position `index` of the canonical enumeration.
  Elem element(std::uint64_t index) const {
    if (!finite()) throw Error(ErrorKind::InfiniteField);
    return Elem(impl(), static_cast<std::uint32_t>(index % impl_->order));
  }
  std::vector<std::uint32_t> coeffs(const Elem& x) const { return impl_->decode(x.index()); }

  Elem make(const Elem& x) const {
    if (x.field() != impl() && !impl()->same_as(*x.field()))
      throw Error(ErrorKind::ContextMismatch);
    return x;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_->same_as(*b.impl_);
  }

  std::string name() const {
    switch (kind()) {
      case FieldKind::Prime: return "F_" + std::to_string(characteristic());
      case FieldKind::Extension: return "F_" + std::to_string(order());
      case FieldKind::Rational: return "Q";
    }
    return "?";
  }

 private:
  explicit Field(std::shared_ptr<const FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const FieldImpl> impl_;
};

/// Whether `src` embeds into `dst` by a supported map (identity, or the
/// prime subfield F_p into F_{p^d}).
inline bool can_embed(const Field& src, const Field& dst) {
  if (src == dst) return true;
  return src.kind() == FieldKind::Prime && dst.finite() &&
         src.characteristic() == dst.characteristic();
}

inline Elem field_embed(const Field& src, const Field& dst, const Elem& x) {
  if (!can_embed(src, dst))
    throw Error(ErrorKind::NoEmbedding, src.name() + " -> " + dst.name());
  src.make(x);
  if (src == dst) return x.finite() ? Elem(dst.impl(), x.index()) : Elem(dst.impl(), x.rational());
  return dst.from_int(x.index());
}

}  // namespace sesq
