#pragma once

#include <map>
#include <string>
#include <vector>

#include "repcheck/laurent.hpp"
#include "repcheck/signedperm.hpp"

namespace repcheck {

// Length models for the hyperoctahedral group W_n with generator set
// {w_1, w_{1,2}, ..., w_{n-1,n}}. TypeC is the Coxeter length (w_1-edges
// weigh 1); TypeD0 weighs w_1-edges 0; Type2D weighs them 2. Transposition
// edges always weigh 1.
enum class LengthModel { TypeC, TypeD0, Type2D };

// Roots of the rank-n systems used here, in the basis eps_1..eps_n.
//   Diff: eps_j - eps_i (i < j), Sum: eps_j + eps_i (i < j),
//   Long2: 2 eps_i, Short1: eps_i.
struct Root {
  enum class Kind { Diff, Sum, Long2, Short1 };
  Kind kind;
  int i = 0;  // 1-based
  int j = 0;  // 1-based, used by Diff/Sum only

  bool operator==(const Root& o) const { return kind == o.kind && i == o.i && j == o.j; }
  bool operator<(const Root& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
  std::string to_string() const;
};

enum class GroupKind { QuasiSplit, NonQuasiSplit };

// Positive roots: QuasiSplit {Diff, Sum, Long2}; NonQuasiSplit uses the
// reduced system {Diff, Sum, Short1}.
std::vector<Root> positive_roots(int rank, GroupKind kind);
std::vector<Root> simple_roots(int rank, GroupKind kind);

// Image of a root under w; returns {positive_root, sign}.
struct SignedRoot {
  Root root;
  int sign;  // +1 if w(alpha) positive, -1 otherwise
};
SignedRoot apply_to_root(const SignedPerm& w, const Root& alpha);

// Positive roots (of the given system) sent to negatives by w.
std::vector<Root> inversion_set(const SignedPerm& w, GroupKind kind);

int length(const SignedPerm& w, LengthModel model);
int length_long(const SignedPerm& w);  // |I(w)|

// Generators encoded as ints: 0 = w_1, i >= 1 = w_{i,i+1}.
using Gen = int;
SignedPerm gen_perm(int n, Gen g);

// Lexicographically smallest reduced word (TypeC length), product order:
// w = prod of gen_perm over the word left to right.
std::vector<Gen> reduced_word(const SignedPerm& w);
// Every reduced word of w (used by braid-relation checks; rank <= 4).
std::vector<std::vector<Gen>> all_reduced_words(const SignedPerm& w);

// Dijkstra over the weighted Cayley graph; independent oracle for `length`.
std::map<SignedPerm, int> cayley_distances(int n, LengthModel model);

// Sum over W_n of q^{l(w)} prod_{i in I(w)} x_i, as a Laurent polynomial in
// the rank-n context (t plays q via t^2 = q... here plain q-powers are kept
// as t-exponents doubled; X_i hosts x_i).
Laurent group_generating_sum(int n, LengthModel model);
// The matching product form [n]_q! prod_i (1 + q^{i+shift} x_i) with
// shift = 0 (TypeC), -1 (TypeD0), +1 (Type2D).
Laurent group_generating_product(int n, LengthModel model);

struct PoincareCheck {
  bool ok;
  Laurent lhs, rhs;
};
PoincareCheck poincare_check(int n, LengthModel model);

// Left multiplication by w_1: whenever TypeC length increases, coordinate 1
// is not in I(w) and the long length increments; symmetric statement when it
// decreases. Scans all of W_n.
struct LemmaTrickScan {
  bool ok = true;
  long checked = 0;
  std::string counterexample;  // empty when ok
};
LemmaTrickScan lemma_trick_scan(int n);

}  // namespace repcheck
