#include "uberdh/smith.hpp"

#include <utility>

namespace uberdh {
namespace {

class SmithReducer {
 public:
  SmithReducer(IntMatrix a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      const Ring<BigInt> z;
      u_ = identity_matrix(a_.rows(), z);
      u_inv_ = u_;
      v_ = identity_matrix(a_.cols(), z);
      v_inv_ = v_;
    }
  }

  SmithForm run() {
    const Index limit = std::min(a_.rows(), a_.cols());
    Index t = 0;
    for (; t < limit; ++t) {
      if (!move_smallest_to(t, t, /*whole_block=*/true)) break;
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    for (Index i = 0; i < t; ++i) out.divisors.push_back(a_(i, i));
    if (track_) {
      out.u = std::move(u_);
      out.u_inv = std::move(u_inv_);
      out.v = std::move(v_);
      out.v_inv = std::move(v_inv_);
    }
    return out;
  }

 private:
  // Brings the nonzero entry of least absolute value into (t, t), searching
  // either the whole trailing block or just row t and column t.
  bool move_smallest_to(Index t, Index, bool whole_block) {
    Index bi = -1, bj = -1;
    BigInt best;
    auto consider = [&](Index i, Index j) {
      const BigInt& x = a_(i, j);
      if (x.is_zero()) return;
      BigInt ax = boost::multiprecision::abs(x);
      if (bi < 0 || ax < best) {
        best = std::move(ax);
        bi = i;
        bj = j;
      }
    };
    if (whole_block) {
      for (Index j = t; j < a_.cols(); ++j)
        for (Index i = t; i < a_.rows(); ++i) consider(i, j);
    } else {
      for (Index i = t; i < a_.rows(); ++i) consider(i, t);
      for (Index j = t + 1; j < a_.cols(); ++j) consider(t, j);
    }
    if (bi < 0) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void reduce_pivot(Index t) {
    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t).is_zero()) continue;
        const BigInt q = a_(i, t) / a_(t, t);
        if (!q.is_zero()) add_row(i, t, -q);
        if (!a_(i, t).is_zero()) clean = false;
      }
      for (Index j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j).is_zero()) continue;
        const BigInt q = a_(t, j) / a_(t, t);
        if (!q.is_zero()) add_col(j, t, -q);
        if (!a_(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        move_smallest_to(t, t, false);
        continue;
      }
      // Divisibility: every remaining entry must be a multiple of the pivot.
      Index bad = -1;
      for (Index j = t + 1; j < a_.cols() && bad < 0; ++j)
        for (Index i = t + 1; i < a_.rows(); ++i)
          if (!(a_(i, j) % a_(t, t)).is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) return;
      add_row(t, bad, BigInt(1));
    }
  }

  // row_i += q * row_k
  void add_row(Index i, Index k, const BigInt& q) {
    a_.row(i) += q * a_.row(k);
    if (track_) {
      u_.row(i) += q * u_.row(k);
      u_inv_.col(k) -= q * u_inv_.col(i);
    }
  }
  // col_j += q * col_k
  void add_col(Index j, Index k, const BigInt& q) {
    a_.col(j) += q * a_.col(k);
    if (track_) {
      v_.col(j) += q * v_.col(k);
      v_inv_.row(k) -= q * v_inv_.row(j);
    }
  }
  void swap_rows(Index i, Index k) {
    a_.row(i).swap(a_.row(k));
    if (track_) {
      u_.row(i).swap(u_.row(k));
      u_inv_.col(i).swap(u_inv_.col(k));
    }
  }
  void swap_cols(Index j, Index k) {
    a_.col(j).swap(a_.col(k));
    if (track_) {
      v_.col(j).swap(v_.col(k));
      v_inv_.row(j).swap(v_inv_.row(k));
    }
  }
  void negate_row(Index i) {
    a_.row(i) = -a_.row(i);
    if (track_) {
      u_.row(i) = -u_.row(i);
      u_inv_.col(i) = -u_inv_.col(i);
    }
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_, u_inv_, v_, v_inv_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, bool with_transforms) {
  return SmithReducer(std::move(a), with_transforms).run();
}

}  // namespace uberdh
