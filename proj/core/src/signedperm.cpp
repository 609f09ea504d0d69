#include "repcheck/signedperm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repcheck {

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  int n = static_cast<int>(img_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : img_) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("SignedPerm: invalid images");
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::flip1(int n) { return flip_at(n, 1); }

SignedPerm SignedPerm::flip_at(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("SignedPerm::flip_at: bad index");
  SignedPerm w = identity(n);
  w.img_[i - 1] = -i;
  return w;
}

SignedPerm SignedPerm::transposition(int n, int i) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("SignedPerm::transposition: bad index");
  SignedPerm w = identity(n);
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

int SignedPerm::apply(int i) const {
  if (i == 0 || std::abs(i) > size()) throw std::out_of_range("SignedPerm::apply");
  int v = img_[std::abs(i) - 1];
  return i > 0 ? v : -v;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (size() != o.size()) throw std::invalid_argument("SignedPerm::*: size mismatch");
  std::vector<int> v(size());
  for (int i = 1; i <= size(); ++i) v[i - 1] = apply(o.apply(i));
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> v(size());
  for (int i = 1; i <= size(); ++i) {
    int w = img_[i - 1];
    v[std::abs(w) - 1] = w > 0 ? i : -i;
  }
  return SignedPerm(std::move(v));
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

std::vector<int> SignedPerm::neg_set() const {
  std::vector<int> out;
  for (int v : img_)
    if (v < 0) out.push_back(-v);
  std::sort(out.begin(), out.end());
  return out;
}

SignedPerm SignedPerm::abs_perm() const {
  std::vector<int> v(size());
  for (int i = 0; i < size(); ++i) v[i] = std::abs(img_[i]);
  return SignedPerm(std::move(v));
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << img_[i];
  }
  return os.str();
}

SignedPerm SignedPerm::parse(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    v.push_back(std::stoi(tok));
  }
  return SignedPerm(std::move(v));
}

std::vector<SignedPerm> enumerate_group(int n, int max_n) {
  if (n < 1 || n > max_n) throw BoundExceeded("enumerate_group: rank out of bounds");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  out.reserve((static_cast<std::size_t>(1) << n) * 720);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  for (const auto& p : perms) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> v = p;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) v[i] = -v[i];
      out.emplace_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ITDecomposition decompose_IT(const SignedPerm& w) {
  return ITDecomposition{w.neg_set(), w.abs_perm()};
}

}  // namespace repcheck
