#include "fcaff/affine_permutation.hpp"

#include <numeric>
#include <sstream>

#include "fcaff/error.hpp"

namespace fcaff {

namespace {

using value_type = AffinePermutation::value_type;

// Writes k = r + q*m with 1 <= r <= m.
void split(value_type k, value_type m, value_type& r, value_type& q) {
  r = ((k - 1) % m + m) % m + 1;
  q = (k - r) / m;
}

}  // namespace

AffinePermutation::AffinePermutation(int n, std::vector<value_type> window)
    : n_(n), window_(std::move(window)) {
  check_rank(n);
  value_type const m = n + 1;
  if (window_.size() != static_cast<std::size_t>(m)) {
    throw Error("window of an affine permutation of rank " + std::to_string(n)
                + " must have " + std::to_string(m) + " entries");
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  value_type shift = 0;
  for (value_type i = 1; i <= m; ++i) {
    value_type r = 0;
    value_type q = 0;
    split(window_[i - 1], m, r, q);
    if (seen[r - 1]) {
      throw Error("window residues are not a complete system: "
                  + to_string());
    }
    seen[r - 1] = true;
    shift += window_[i - 1] - i;
  }
  if (shift != 0) {
    throw Error("total shift of " + to_string() + " is not zero");
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  check_rank(n);
  std::vector<value_type> w(static_cast<std::size_t>(n + 1));
  std::iota(w.begin(), w.end(), value_type{1});
  return AffinePermutation(Unchecked{}, n, std::move(w));
}

AffinePermutation AffinePermutation::generator(int n, Letter s) {
  return identity(n).times_generator(s);
}

value_type AffinePermutation::operator()(value_type k) const {
  value_type r = 0;
  value_type q = 0;
  split(k, period(), r, q);
  return window_[r - 1] + q * period();
}

AffinePermutation AffinePermutation::times_generator(Letter s) const {
  if (!is_valid_letter(n_, s)) {
    throw Error("letter out of range");
  }
  std::vector<value_type> w = window_;
  value_type const m = period();
  if (s <= n_) {
    std::swap(w[s - 1], w[s]);
  } else {
    value_type const last = w[m - 1];
    w[m - 1] = w[0] + m;
    w[0] = last - m;
  }
  return AffinePermutation(Unchecked{}, n_, std::move(w));
}

AffinePermutation AffinePermutation::generator_times(Letter s) const {
  if (!is_valid_letter(n_, s)) {
    throw Error("letter out of range");
  }
  std::vector<value_type> w = window_;
  value_type const m = period();
  for (value_type& v : w) {
    value_type r = 0;
    value_type q = 0;
    split(v, m, r, q);
    if (r == s) {
      v += 1;
    } else if (r == (s % m) + 1) {
      v -= 1;
    }
  }
  return AffinePermutation(Unchecked{}, n_, std::move(w));
}

bool AffinePermutation::has_right_descent(Letter s) const {
  if (!is_valid_letter(n_, s)) {
    throw Error("letter out of range");
  }
  if (s <= n_) {
    return window_[s - 1] > window_[s];
  }
  return window_[n_] > window_[0] + period();
}

bool AffinePermutation::has_left_descent(Letter s) const {
  return invert(*this).has_right_descent(s);
}

bool AffinePermutation::is_identity() const {
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<value_type>(i + 1)) {
      return false;
    }
  }
  return true;
}

bool AffinePermutation::is_finite_part() const {
  for (value_type v : window_) {
    if (v < 1 || v > period()) {
      return false;
    }
  }
  return true;
}

std::string AffinePermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) {
    os << (i ? "," : "") << window_[i];
  }
  os << ']';
  return os.str();
}

std::size_t AffinePermutationHash::operator()(
    const AffinePermutation& u) const noexcept {
  std::size_t h = static_cast<std::size_t>(u.rank());
  for (value_type v : u.window()) {
    h ^= std::hash<value_type>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
  }
  return h;
}

AffinePermutation compose(const AffinePermutation& u,
                          const AffinePermutation& v) {
  if (u.rank() != v.rank()) {
    throw Error("rank mismatch in compose");
  }
  std::vector<value_type> w(v.window().size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = u(v.window()[i]);
  }
  return AffinePermutation(u.rank(), std::move(w));
}

AffinePermutation invert(const AffinePermutation& u) {
  value_type const m = u.period();
  std::vector<value_type> w(static_cast<std::size_t>(m));
  for (value_type i = 1; i <= m; ++i) {
    value_type r = 0;
    value_type q = 0;
    split(u.window()[i - 1], m, r, q);
    w[r - 1] = i - q * m;
  }
  return AffinePermutation(u.rank(), std::move(w));
}

}  // namespace fcaff
