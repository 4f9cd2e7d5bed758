#include "logforms/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace logforms {

Integer GaussianRational::denominator() const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), re.get_den_mpz_t(), im.get_den_mpz_t());
  return l;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

GaussianRational pow(const GaussianRational& z, long e) {
  if (e < 0) {
    if (z.is_zero()) throw std::domain_error("pow: zero to a negative power");
    return GaussianRational(1) / pow(z, -e);
  }
  if (z.is_real()) return GaussianRational(pow(z.re, e));
  GaussianRational result(1), base = z;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (sgn(q) == 0) throw std::domain_error("pow: zero to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

Integer pow(const Integer& z, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re.get_str();
  std::string im;
  if (z.im == 1) im = "i";
  else if (z.im == -1) im = "-i";
  else im = z.im.get_str() + "*i";
  if (sgn(z.re) == 0) return im;
  if (im[0] == '-') return z.re.get_str() + im;
  return z.re.get_str() + "+" + im;
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') out += c;
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw std::invalid_argument("bad rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

GaussianRational parse_gaussian(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty complex rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split at the last sign that is not leading and not after '/'.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  else if (im == "-") im = "-1";
  return {parse_rational(re), parse_rational(im)};
}

Integer lcm_upto(unsigned long n) {
  Integer d = 1;
  if (n < 2) return d;
  for (std::uint64_t p : primes_in(2, n)) {
    std::uint64_t q = p;
    while (q <= n / p) q *= p;
    d *= Integer(static_cast<unsigned long>(q));
  }
  return d;
}

unsigned long ordp_factorial(unsigned long p, unsigned long N) {
  if (!is_prime(p)) throw std::invalid_argument("ordp_factorial: p is not prime");
  unsigned long total = 0;
  for (unsigned long q = N / p; q > 0; q /= p) total += q;
  return total;
}

unsigned long ordp(const Integer& x, unsigned long p) {
  if (sgn(x) == 0) throw std::domain_error("ordp of zero");
  Integer rest;
  Integer pp = p;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kSieveLimit = 10'000'000;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  std::uint64_t sieve_hi = std::min(hi, kSieveLimit);
  if (lo <= sieve_hi) {
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(sieve_hi))) + 1;
    std::vector<std::uint64_t> base = small_primes(root);
    constexpr std::uint64_t segment = 1 << 18;
    for (std::uint64_t start = lo; start <= sieve_hi; start += segment) {
      std::uint64_t end = std::min(sieve_hi, start + segment - 1);
      std::vector<char> composite(end - start + 1, 0);
      for (std::uint64_t p : base) {
        if (p * p > end) break;
        std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
        for (std::uint64_t j = first; j <= end; j += p) composite[j - start] = 1;
      }
      for (std::uint64_t k = start; k <= end; ++k)
        if (!composite[k - start]) out.push_back(k);
    }
  }
  for (std::uint64_t k = std::max(lo, kSieveLimit + 1); k <= hi && k >= lo; ++k) {
    if (is_prime(k)) out.push_back(k);
    if (k == UINT64_MAX) break;
  }
  return out;
}

Integer binomial(long n, long k) {
  Integer r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::uint64_t smallest_prime_factor(const Integer& x, std::uint64_t limit) {
  Integer a = abs(x);
  if (a <= 1) return 0;
  if (a.fits_ulong_p() && is_prime(a.get_ui())) return a.get_ui() <= limit ? a.get_ui() : 0;
  for (std::uint64_t p = 2; p <= limit; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) return p;
  }
  return 0;
}

}  // namespace logforms
