#pragma once

#include <vector>

#include "starq/contraction.hpp"

namespace starq {

// Wedge exponential of a nilpotent even element: sum_n F^n / n!.
// Requires F to contain even grades >= 2 only.
template <class R>
Multivector<R> grassmann_exp(const Multivector<R>& F) {
  using Traits = scalar_traits<R>;
  for (const auto& [mask, v] : F.terms()) {
    const int g = std::popcount(mask);
    if (g == 0 || g % 2 != 0)
      throw std::invalid_argument("grassmann_exp needs even grades >= 2 only");
  }
  Multivector<R> out = Multivector<R>::unit(F.dim());
  Multivector<R> power = out;
  long factorial = 1;
  for (int n = 1; n <= F.dim() / 2; ++n) {
    power = power * F;
    if (power.is_zero()) break;
    factorial *= n;
    out += Traits::from_rational(1, factorial) * power;
  }
  return out;
}

// Dense matrix inversion over the scalar ring by Gauss-Jordan elimination.
// Pivots must be invertible (single-term) scalars; throws otherwise.
template <class R>
std::vector<R> invert_matrix(int n, const std::vector<R>& m) {
  using Traits = scalar_traits<R>;
  std::vector<R> a = m;
  std::vector<R> inv(static_cast<std::size_t>(n) * n, Traits::zero());
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = Traits::one();
  auto at = [n](std::vector<R>& v, int r, int c) -> R& { return v[static_cast<std::size_t>(r) * n + c]; };
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!Traits::is_zero(at(a, r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix is singular over the exact scalar ring");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(at(a, pivot, c), at(a, col, c));
        std::swap(at(inv, pivot, c), at(inv, col, c));
      }
    const R pinv = Traits::inverse(at(a, col, col));
    for (int c = 0; c < n; ++c) {
      at(a, col, c) = at(a, col, c) * pinv;
      at(inv, col, c) = at(inv, col, c) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || Traits::is_zero(at(a, r, col))) continue;
      const R f = at(a, r, col);
      for (int c = 0; c < n; ++c) {
        at(a, r, c) = at(a, r, c) - f * at(a, col, c);
        at(inv, r, c) = at(inv, r, c) - f * at(inv, col, c);
      }
    }
  }
  return inv;
}

// Grade-2 form F with sum_{r,s} F^{rs} g(theta_i,theta_s) g(theta_j,theta_r)
// = A(theta_i,theta_j)/2, solved as the matrix F = -(1/2) g^{-1} A g^{-1}.
template <class R>
struct WickForm {
  Multivector<R> form;          // F^{ij} theta_i theta_j summed over all i,j
  std::vector<R> matrix;        // antisymmetric coefficient matrix F^{ij}
};

template <class R>
WickForm<R> solve_wick_form(const BilinearForm<R>& B) {
  using Traits = scalar_traits<R>;
  const int d = B.dim();
  std::vector<R> g(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g[static_cast<std::size_t>(i) * d + j] = B.g(i, j);
  std::vector<R> ginv;
  try {
    ginv = invert_matrix(d, g);
  } catch (const std::domain_error&) {
    throw std::domain_error("symmetric part g of the bilinear form is singular");
  }
  auto idx = [d](int r, int c) { return static_cast<std::size_t>(r) * d + c; };
  std::vector<R> F(static_cast<std::size_t>(d) * d, Traits::zero());
  const R minus_half = Traits::from_rational(-1, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      R acc = Traits::zero();
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) acc += ginv[idx(i, r)] * B.a(r, s) * ginv[idx(s, j)];
      F[idx(i, j)] = minus_half * acc;
    }
  WickForm<R> out;
  out.matrix = F;
  out.form = Multivector<R>(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j || Traits::is_zero(F[idx(i, j)])) continue;
      const int sign = i < j ? 1 : -1;
      const std::uint32_t mask = (1u << i) | (1u << j);
      out.form.add_term(mask, sign > 0 ? F[idx(i, j)] : -F[idx(i, j)]);
    }
  return out;
}

// Wick conjugation u -> e^{-F} u e^{F} with plain Grassmann multiplication.
template <class R>
Multivector<R> wick_conjugate(const Multivector<R>& u, const Multivector<R>& F) {
  return grassmann_exp(-F) * u * grassmann_exp(F);
}

template <class R>
R scalar_part(const Multivector<R>& u) {
  return u.scalar_part();
}

// Wick pairing sum over perfect matchings with alternating signs; the
// independent oracle for the scalar part of circle-product chains.
template <class R>
R wick_pairing_sum(const std::vector<int>& indices, const BilinearForm<R>& B) {
  using Traits = scalar_traits<R>;
  if (indices.empty()) return Traits::one();
  if (indices.size() % 2 != 0) return Traits::zero();
  R acc = Traits::zero();
  for (std::size_t k = 1; k < indices.size(); ++k) {
    std::vector<int> rest;
    rest.reserve(indices.size() - 2);
    for (std::size_t m = 1; m < indices.size(); ++m)
      if (m != k) rest.push_back(indices[m]);
    R term = B(indices[0], indices[k]) * wick_pairing_sum(rest, B);
    acc += (k % 2 == 1) ? term : -term;
  }
  return acc;
}

// Both sides of the scalar-part equivalence
//   eps[theta_{i1} o_B ... o_B theta_{in}]
//   = eps[e^{-F} (theta_{i1} o_g ... o_g theta_{in} o_g e^F)].
template <class R>
struct ScalarEquivalenceReport {
  R lhs, rhs, difference;
  bool pass = false;
};

template <class R>
ScalarEquivalenceReport<R> scalar_equivalence_check(const std::vector<int>& indices,
                                                    const BilinearForm<R>& B) {
  using Traits = scalar_traits<R>;
  const int d = B.dim();
  const BilinearForm<R> g = B.symmetric_part();
  const WickForm<R> wick = solve_wick_form(B);

  Multivector<R> lhs_chain = Multivector<R>::unit(d);
  for (int idx : indices)
    lhs_chain = circle_product(lhs_chain, Multivector<R>::generator(d, idx + 1), B);

  Multivector<R> rhs_chain = Multivector<R>::unit(d);
  for (int idx : indices)
    rhs_chain = circle_product(rhs_chain, Multivector<R>::generator(d, idx + 1), g);
  rhs_chain = circle_product(rhs_chain, grassmann_exp(wick.form), g);
  rhs_chain = grassmann_exp(-wick.form) * rhs_chain;

  ScalarEquivalenceReport<R> out;
  out.lhs = lhs_chain.scalar_part();
  out.rhs = rhs_chain.scalar_part();
  out.difference = out.lhs - out.rhs;
  out.pass = Traits::is_zero(out.difference);
  return out;
}

}  // namespace starq
