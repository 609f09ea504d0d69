#pragma once

#include <string>
#include <vector>

namespace repcheck {

// Signed permutation of {1..n}: img[i-1] = w(i), values in ±{1..n} with
// distinct absolute values. Composition is (a*b)(i) = a(b(i)) with sign
// transport through negatives: w(-i) = -w(i).
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);

  static SignedPerm identity(int n);
  // Sign flip at coordinate 1 (the generator w_1).
  static SignedPerm flip1(int n);
  // Sign flip at coordinate i (1-based).
  static SignedPerm flip_at(int n, int i);
  // Transposition of coordinates (i, i+1), 1-based i in [1, n-1].
  static SignedPerm transposition(int n, int i);

  int size() const { return static_cast<int>(img_.size()); }
  // w applied to a signed index in ±{1..n}.
  int apply(int i) const;
  const std::vector<int>& images() const { return img_; }

  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
  bool operator!=(const SignedPerm& o) const { return img_ != o.img_; }
  bool operator<(const SignedPerm& o) const { return img_ < o.img_; }
  bool is_identity() const;

  // I(w): sorted indices j such that some coordinate maps to -j.
  std::vector<int> neg_set() const;
  int neg_count() const { return static_cast<int>(neg_set().size()); }
  // Underlying unsigned permutation |w|.
  SignedPerm abs_perm() const;

  std::string to_string() const;  // e.g. "1,-3,2"
  static SignedPerm parse(const std::string& text);

 private:
  std::vector<int> img_;
};

// Deterministic full enumeration of W_n (size 2^n n!), ordered
// lexicographically by image vector. Throws BoundExceeded for n > max_n.
std::vector<SignedPerm> enumerate_group(int n, int max_n = 6);

struct BoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Decomposition w = w_I * w_tau with w_I the sign flips on I(w) and
// w_tau = |w|.
struct ITDecomposition {
  std::vector<int> I;
  SignedPerm tau;
};
ITDecomposition decompose_IT(const SignedPerm& w);

}  // namespace repcheck
