// Copyright 2026 The gramdim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gramdim/sos_cert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gramdim/errors.hpp"

namespace gramdim {

std::vector<ComplexRoot> complex_roots(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<ComplexRoot> out;
  for (const auto& [factor, k] : square_free_decomposition(f)) {
    const int n_real = count_real_roots(factor);
    auto roots = simple_roots(factor);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      return std::abs(a.imag()) < std::abs(b.imag());
    });
    for (int i = 0; i < n_real; ++i) {
      out.push_back({{roots[static_cast<std::size_t>(i)].real(), 0.0}, k});
    }
    std::vector<std::complex<double>> rest(roots.begin() + n_real, roots.end());
    if (rest.size() % 2 != 0) throw NumericalFailure("non-real roots do not come in pairs");
    std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) { return a.imag() > b.imag(); });
    const std::size_t half = rest.size() / 2;
    std::vector<bool> used(rest.size(), false);
    for (std::size_t u = 0; u < half; ++u) {
      const auto z = rest[u];
      if (!(z.imag() > 0)) throw NumericalFailure("non-real root expected in the upper half plane");
      std::size_t best = rest.size();
      double best_dist = 0;
      for (std::size_t l = half; l < rest.size(); ++l) {
        if (used[l]) continue;
        const double dist = std::abs(rest[l] - std::conj(z));
        if (best == rest.size() || dist < best_dist) {
          best = l;
          best_dist = dist;
        }
      }
      if (best == rest.size() || best_dist > 1e-8 * (1 + std::abs(z))) {
        throw NumericalFailure("root has no conjugate partner within tolerance");
      }
      used[best] = true;
      out.push_back({z, k});
      out.push_back({std::conj(z), k});
    }
  }
  return out;
}

namespace {

using ComplexLD = std::complex<long double>;

// poly *= (x - root)
void multiply_linear(std::vector<ComplexLD>& poly, ComplexLD root) {
  poly.push_back(0);
  for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] = poly[i - 1] - root * poly[i];
  poly[0] = -root * poly[0];
}

void require_nonnegative(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("two-squares certificate of the zero polynomial");
  if (!is_nonnegative(f)) {
    throw NotNonnegative("polynomial " + to_string(f) + " is not nonnegative on the real line");
  }
}

SosCertificate assemble(const Polynomial& f, const std::vector<ComplexRoot>& roots,
                        const std::vector<bool>& flips) {
  const int d = f.degree() / 2;
  std::vector<ComplexLD> h{std::sqrt(static_cast<long double>(f.leading().get_d()))};

  std::size_t copy = 0;
  for (const auto& [z, k] : roots) {
    if (z.imag() == 0) {
      for (int rep = 0; rep < k / 2; ++rep) multiply_linear(h, ComplexLD(z.real(), 0));
    } else if (z.imag() > 0) {
      for (int rep = 0; rep < k; ++rep, ++copy) {
        const bool flip = copy < flips.size() && flips[copy];
        multiply_linear(h, ComplexLD(z.real(), flip ? -z.imag() : z.imag()));
      }
    }
  }
  if (static_cast<int>(h.size()) != d + 1) throw NumericalFailure("root count does not match the degree");

  SosCertificate cert;
  cert.p.resize(static_cast<std::size_t>(d) + 1);
  cert.q.resize(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    cert.p[i] = static_cast<double>(h[i].real());
    cert.q[i] = static_cast<double>(h[i].imag());
  }
  cert.gram_point = SymMatrix::outer(cert.p) + SymMatrix::outer(cert.q);

  long double err = 0;
  long double scale = 0;
  for (int m = 0; m <= 2 * d; ++m) {
    long double s = 0;
    for (int i = std::max(0, m - d); i <= std::min(m, d); ++i) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(m - i);
      s += static_cast<long double>(cert.p[a]) * cert.p[b] + static_cast<long double>(cert.q[a]) * cert.q[b];
    }
    const auto c = static_cast<long double>(f.coeff(m).get_d());
    err = std::max(err, std::abs(s - c));
    scale = std::max(scale, std::abs(c));
  }
  cert.residual = static_cast<double>(err / scale);
  if (!(cert.residual <= kSosResidualLimit)) {
    std::ostringstream msg;
    msg << "two-squares residual " << cert.residual << " exceeds " << kSosResidualLimit;
    throw NumericalFailure(msg.str());
  }
  return cert;
}

int copy_count(const std::vector<ComplexRoot>& roots) {
  int copies = 0;
  for (const auto& r : roots) {
    if (r.value.imag() > 0) copies += r.multiplicity;
  }
  return copies;
}

}  // namespace

int conjugate_copy_count(const Polynomial& f) { return copy_count(complex_roots(f)); }

SosCertificate two_squares(const Polynomial& f, const std::vector<bool>& flips) {
  require_nonnegative(f);
  return assemble(f, complex_roots(f), flips);
}

SosCertificate two_squares(const Polynomial& f) { return two_squares(f, {}); }

std::vector<SosCertificate> two_squares_variants(const Polynomial& f, int max_variants) {
  require_nonnegative(f);
  const auto roots = complex_roots(f);
  std::vector<SosCertificate> out;
  out.push_back(assemble(f, roots, {}));
  const int copies = copy_count(roots);
  if (copies <= 1) return out;

  // Flipping every copy conjugates h and reproduces the same Gram point, so
  // the first copy stays fixed.
  const int free_copies = copies - 1;
  if (free_copies < 30 && (1LL << free_copies) <= max_variants) {
    for (long long mask = 1; mask < (1LL << free_copies); ++mask) {
      std::vector<bool> flips(static_cast<std::size_t>(copies), false);
      for (int j = 0; j < free_copies; ++j) flips[static_cast<std::size_t>(j + 1)] = (mask >> j) & 1;
      out.push_back(assemble(f, roots, flips));
    }
  } else {
    for (int j = 1; j < copies; ++j) {
      std::vector<bool> flips(static_cast<std::size_t>(copies), false);
      flips[static_cast<std::size_t>(j)] = true;
      out.push_back(assemble(f, roots, flips));
    }
  }
  return out;
}

}  // namespace gramdim
