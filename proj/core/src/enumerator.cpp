// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "wfano/singularities.hpp"

namespace wfano {

std::vector<Stratum> singular_strata(const Weights& w) {
  std::vector<Stratum> out;
  for (unsigned mask = 1; mask < (1u << kNumVariables); ++mask) {
    VariableSet vars(mask);
    int r = 0;
    for (std::size_t i = 0; i < kNumVariables; ++i) {
      if (vars.test(i)) r = std::gcd(r, w[i]);
    }
    if (r >= 2) out.push_back(Stratum{vars, r});
  }
  return out;
}

bool is_quasismooth_general(const Weights& w) {
  const int d = w.degree();
  for (unsigned mask = 1; mask < (1u << kNumVariables); ++mask) {
    VariableSet vars(mask);
    if (has_monomial_of_degree(w, d, vars)) continue;
    std::size_t eliminators = 0;
    for (std::size_t j = 0; j < kNumVariables; ++j) {
      if (vars.test(j)) continue;
      const int rest = d - w[j];
      if (rest > 0 && has_monomial_of_degree(w, rest, vars)) ++eliminators;
    }
    if (eliminators < vars.count()) return false;
  }
  return true;
}

TerminalityVerdict check_terminal(const Weights& w) {
  for (const auto& s : singular_strata(w)) {
    if (s.dimension() >= 2) {
      return {false, Errc::NonTerminal,
              "singular locus of dimension " + std::to_string(s.dimension()) + " with r=" +
                  std::to_string(s.r)};
    }
  }
  try {
    (void)basket(w);
  } catch (const Error& e) {
    return {false, e.code(), e.what()};
  }
  return {true, std::nullopt, {}};
}

bool has_only_terminal_isolated_sings(const Weights& w) { return check_terminal(w).terminal; }

bool is_accepted(const Weights& w) {
  return is_quasismooth_general(w) && has_only_terminal_isolated_sings(w);
}

namespace {

void scan(int a4_bound, int a4_start, int step, std::vector<Weights>& out) {
  for (int a4 = a4_start; a4 <= a4_bound; a4 += step) {
    for (int a3 = 1; a3 <= a4; ++a3) {
      for (int a2 = 1; a2 <= a3; ++a2) {
        for (int a1 = 1; a1 <= a2; ++a1) {
          if (std::gcd(std::gcd(a1, a2), std::gcd(a3, a4)) != 1) continue;
          Weights w(a1, a2, a3, a4);
          if (is_accepted(w)) out.push_back(w);
        }
      }
    }
  }
}

}  // namespace

std::vector<Weights> enumerate_families(int a4_bound, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<Weights>> parts(threads);
  if (threads == 1) {
    scan(a4_bound, 1, 1, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back(scan, a4_bound, static_cast<int>(t) + 1, static_cast<int>(threads),
                           std::ref(parts[t]));
    }
    for (auto& worker : workers) worker.join();
  }
  std::vector<Weights> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(), [](const Weights& x, const Weights& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.quadruple() < y.quadruple();
  });
  return out;
}

}  // namespace wfano
