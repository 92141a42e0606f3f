#include "pwl/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwl/map.hpp"

namespace pwl {

namespace {

constexpr char kSymbols[3] = {'L', 'M', 'R'};

bool is_canonical_rotation(const std::string& seq) {
  const int k = static_cast<int>(seq.size());
  for (int r = 1; r < k; ++r) {
    for (int i = 0; i < k; ++i) {
      const char a = seq[static_cast<std::size_t>(i)];
      const char b = seq[static_cast<std::size_t>((i + r) % k)];
      if (a != b) {
        if (b < a) return false;  // a smaller rotation exists
        break;
      }
    }
  }
  return true;
}

Branch to_branch(char c) {
  if (c == 'L') return Branch::L;
  if (c == 'M') return Branch::M;
  return Branch::R;
}

bool itinerary_matches(State s, const std::string& seq, const ModelParams& p,
                       double closure_tol) {
  const State start = s;
  for (const char sym : seq) {
    if (branch_of(s, p) != to_branch(sym)) return false;
    s = step_m(s, p);
  }
  return std::abs(s.x - start.x) <= closure_tol &&
         std::abs(s.y - start.y) <= closure_tol;
}

bool probe_admissible(const Mat2& jk, const std::string& seq,
                      const ModelParams& p) {
  // null direction of (J_k - I), taken from the larger of the two rows
  const double r1x = jk.a11 - 1.0, r1y = jk.a12;
  const double r2x = jk.a21, r2y = jk.a22 - 1.0;
  double vx, vy;
  if (std::hypot(r1x, r1y) >= std::hypot(r2x, r2y)) {
    vx = -r1y;
    vy = r1x;
  } else {
    vx = -r2y;
    vy = r2x;
  }
  const double norm = std::hypot(vx, vy);
  if (norm == 0.0) {  // J_k == I: every direction is fixed
    vx = 1.0;
    vy = 1.0;
  } else {
    vx /= norm;
    vy /= norm;
  }

  constexpr int kProbes = 128;
  const double span = 4.0 * p.h;
  const double closure_tol = 1e-6 * std::max(1.0, span);
  for (int i = 0; i < kProbes; ++i) {
    const double w = -span + 2.0 * span * i / (kProbes - 1);
    State cand;
    if (std::abs(vx) > 1e-12) {
      cand = {w, vy * (w / vx)};
    } else {
      cand = {0.0, w};  // vertical eigendirection
    }
    if (std::abs(cand.x) + std::abs(cand.y) < 1e-14) continue;  // origin
    if (itinerary_matches(cand, seq, p, closure_tol)) return true;
  }
  return false;
}

}  // namespace

std::vector<CycleScanEntry> cycle_scan(const ModelParams& p, int k_max,
                                       double tol) {
  if (k_max < 1) throw std::invalid_argument("cycle_scan: k_max must be >= 1");
  std::vector<CycleScanEntry> entries;
  std::string seq;
  for (int k = 1; k <= k_max; ++k) {
    seq.assign(static_cast<std::size_t>(k), 'L');
    long total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
      long rem = code;
      for (int i = k - 1; i >= 0; --i) {
        seq[static_cast<std::size_t>(i)] = kSymbols[rem % 3];
        rem /= 3;
      }
      if (!is_canonical_rotation(seq)) continue;

      Mat2 jk = Mat2::identity();
      for (const char sym : seq) jk = jacobian(to_branch(sym), p) * jk;

      CycleScanEntry e;
      e.sequence = seq;
      e.k = k;
      e.eig = eigen(jk);
      // det(J - I) = det(J) - tr(J) + 1 for 2x2
      e.unit_eigenvalue = std::abs(jk.det() - jk.trace() + 1.0) < tol;
      e.admissible = e.unit_eigenvalue && probe_admissible(jk, seq, p);
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

}  // namespace pwl
