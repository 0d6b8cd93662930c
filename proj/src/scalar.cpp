#include "qtilt/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace qtilt {

namespace {

thread_local Field tl_field = Field::rationals();

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();

bool fits(__int128 v) { return v <= kMax64 && v >= kMin64; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mod_p(__int128 v, std::uint64_t p) {
  __int128 r = v % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 result = 1, base = b % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw Error("field: prime must be below 2^31");
  if (!is_prime_number(p)) throw Error("field: " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 3 && text.substr(0, 2) == "Fp" && (text[2] == ':' || text[2] == ' ')) {
    std::string_view digits = text.substr(3);
    while (!digits.empty() && digits.front() == ' ') digits.remove_prefix(1);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error("field: expected Q or Fp:<prime>, got '" + std::string(text) + "'");
}

std::string Field::str() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Field current_field() { return tl_field; }

FieldScope::FieldScope(Field f) : saved_(tl_field) { tl_field = f; }
FieldScope::~FieldScope() { tl_field = saved_; }

Scalar::Scalar(std::int64_t v) {
  if (std::uint64_t p = tl_field.characteristic())
    num_ = static_cast<std::int64_t>(mod_p(v, p));
  else
    num_ = v;
}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("scalar: zero denominator");
  if (std::uint64_t p = tl_field.characteristic()) {
    std::uint64_t d = mod_p(den, p);
    if (d == 0) throw Error("scalar: denominator vanishes in " + tl_field.str());
    unsigned __int128 r = static_cast<unsigned __int128>(mod_p(num, p)) * pow_mod(d, p - 2, p) % p;
    num_ = static_cast<std::int64_t>(r);
    return;
  }
  set_fraction(num, den);
}

void Scalar::set_big(mpq_class v) {
  v.canonicalize();
  if (v.get_den().fits_slong_p() && v.get_num().fits_slong_p()) {
    num_ = v.get_num().get_si();
    den_ = v.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(v));
  }
}

void Scalar::set_fraction(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  unsigned __int128 an = n < 0 ? static_cast<unsigned __int128>(-n) : static_cast<unsigned __int128>(n);
  unsigned __int128 g = gcd128(an, static_cast<unsigned __int128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n == 0) d = 1;
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  auto to_mpz = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  set_big(mpq_class(to_mpz(n), to_mpz(d)));
}

mpq_class Scalar::as_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Scalar::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Scalar::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error("scalar: empty literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("scalar: malformed literal '" + s + "'");
  if (q.get_den() == 0) throw Error("scalar: zero denominator in '" + s + "'");
  q.canonicalize();
  if (std::uint64_t p = tl_field.characteristic()) {
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class n = q.get_num() % pm, d = q.get_den() % pm;
    if (n < 0) n += pm;
    if (d == 0) throw Error("scalar: denominator of '" + s + "' vanishes in " + tl_field.str());
    Scalar r;
    r.num_ = static_cast<std::int64_t>(n.get_ui());
    Scalar dd;
    dd.num_ = static_cast<std::int64_t>(d.get_ui());
    return r * dd.inverse();
  }
  Scalar r;
  r.set_big(std::move(q));
  return r;
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("scalar: division by zero");
  if (std::uint64_t p = tl_field.characteristic()) {
    Scalar r;
    r.num_ = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(num_), p - 2, p));
    return r;
  }
  Scalar r;
  if (big_) {
    r.set_big(1 / *big_);
  } else if (num_ < 0) {
    r.set_fraction(-static_cast<__int128>(den_), -static_cast<__int128>(num_));
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  if (std::uint64_t p = tl_field.characteristic()) {
    r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(p - static_cast<std::uint64_t>(num_));
    return r;
  }
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) {
    r.set_big(-as_mpq());
    return r;
  }
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (std::uint64_t p = tl_field.characteristic()) {
    unsigned __int128 s = static_cast<unsigned __int128>(num_) + static_cast<std::uint64_t>(o.num_);
    num_ = static_cast<std::int64_t>(s % p);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r)) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_fraction(n, d);
    return *this;
  }
  set_big(as_mpq() + o.as_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (tl_field.is_prime()) return *this += -o;
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(num_, o.num_, &r)) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_fraction(n, d);
    return *this;
  }
  set_big(as_mpq() - o.as_mpq());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (std::uint64_t p = tl_field.characteristic()) {
    unsigned __int128 s = static_cast<unsigned __int128>(num_) * static_cast<std::uint64_t>(o.num_);
    num_ = static_cast<std::int64_t>(s % p);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r)) {
        num_ = r;
        return *this;
      }
    }
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
        !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d)) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  set_big(as_mpq() * o.as_mpq());
  return *this;
}

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
  if (b.is_zero() || c.is_zero()) return;
  if (!tl_field.is_prime() && !big_ && !b.big_ && !c.big_ && den_ == 1 && b.den_ == 1 && c.den_ == 1) {
    std::int64_t prod, sum;
    if (!__builtin_mul_overflow(b.num_, c.num_, &prod) && !__builtin_add_overflow(num_, prod, &sum)) {
      num_ = sum;
      return;
    }
  }
  *this += b * c;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.big_ || b.big_) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qtilt
