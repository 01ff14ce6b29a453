#include "logq/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace logq {

namespace {

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

struct StringMasks {
  std::uint64_t flip = 0;  // X|Y positions (column = row ^ flip)
  std::uint64_t sign = 0;  // Y|Z positions (row-dependent sign)
  int y_count = 0;
};

StringMasks masks_for(std::uint64_t k, int n_qubits) {
  StringMasks m;
  for (int q = 0; q < n_qubits; ++q) {
    const int bit = n_qubits - 1 - q;
    const int digit = static_cast<int>((k >> (2 * bit)) & 3);
    if (digit == 1) {
      m.flip |= 1ull << bit;
    } else if (digit == 2) {
      m.flip |= 1ull << bit;
      m.sign |= 1ull << bit;
      ++m.y_count;
    } else if (digit == 3) {
      m.sign |= 1ull << bit;
    }
  }
  return m;
}

std::string letters_for(std::uint64_t k, int n_qubits) {
  std::string s(n_qubits, 'I');
  for (int q = 0; q < n_qubits; ++q)
    s[q] = kLetters[(k >> (2 * (n_qubits - 1 - q))) & 3];
  return s;
}

// For a string with an even number of Y letters, entry J[r][r^flip] equals
// (-1)^{y_count/2} * (-1)^{popcount(r & sign)}; it is real.
double entry_sign(const StringMasks& m, std::uint64_t r) {
  int p = std::popcount(r & m.sign) + m.y_count / 2;
  return (p & 1) ? -1.0 : 1.0;
}

StringMasks masks_for_letters(const std::string& letters) {
  StringMasks m;
  const int n = static_cast<int>(letters.size());
  for (int q = 0; q < n; ++q) {
    const int bit = n - 1 - q;
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        m.flip |= 1ull << bit;
        break;
      case 'Y':
        m.flip |= 1ull << bit;
        m.sign |= 1ull << bit;
        ++m.y_count;
        break;
      case 'Z':
        m.sign |= 1ull << bit;
        break;
      default:
        throw std::invalid_argument("bad Pauli letter");
    }
  }
  return m;
}

std::vector<PauliTerm> decompose_range(const LaplacianMatrix& lap,
                                       std::uint64_t k_begin,
                                       std::uint64_t k_end,
                                       double prune_epsilon) {
  const int n_qubits = lap.n_qubits();
  const std::uint64_t dim = 1ull << n_qubits;
  const double norm = 1.0 / static_cast<double>(dim);
  std::vector<PauliTerm> out;
  for (std::uint64_t k = k_begin; k < k_end; ++k) {
    const StringMasks m = masks_for(k, n_qubits);
    if (m.y_count & 1) continue;  // identically zero trace on symmetric input
    double trace = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r)
      trace += entry_sign(m, r) * lap.entries(r ^ m.flip, r);
    const double coeff = trace * norm;
    if (std::abs(coeff) > prune_epsilon)
      out.push_back({letters_for(k, n_qubits), coeff});
  }
  return out;
}

}  // namespace

std::size_t max_term_count(int n_qubits) {
  return ((1ull << (2 * n_qubits)) + (1ull << n_qubits)) / 2;
}

PauliDecomposition decompose(const LaplacianMatrix& lap, double prune_epsilon,
                             int threads) {
  const int n_qubits = lap.n_qubits();
  const std::uint64_t n_strings = 1ull << (2 * n_qubits);
  PauliDecomposition d;
  d.n_qubits = n_qubits;

  if (threads <= 1 || n_strings < 1024) {
    d.terms = decompose_range(lap, 0, n_strings, prune_epsilon);
    return d;
  }

  const int workers = std::min<std::uint64_t>(threads, n_strings);
  std::vector<std::vector<PauliTerm>> chunks(workers);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    const std::uint64_t begin = n_strings * t / workers;
    const std::uint64_t end = n_strings * (t + 1) / workers;
    pool.emplace_back([&, t, begin, end] {
      chunks[t] = decompose_range(lap, begin, end, prune_epsilon);
    });
  }
  for (auto& th : pool) th.join();
  for (auto& c : chunks)
    d.terms.insert(d.terms.end(), c.begin(), c.end());
  return d;
}

double expectation(const PauliDecomposition& d, const StateVector& psi) {
  const std::uint64_t dim = 1ull << d.n_qubits;
  if (psi.size() != dim)
    throw std::invalid_argument("expectation: state dimension mismatch");
  std::complex<double> total = 0.0;
  for (const PauliTerm& term : d.terms) {
    const StringMasks m = masks_for_letters(term.letters);
    std::complex<double> ev = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r)
      ev += std::conj(psi[r]) * entry_sign(m, r) * psi[r ^ m.flip];
    total += term.coefficient * ev;
  }
  if (std::abs(total.imag()) >= 1e-9)
    throw std::runtime_error("expectation: imaginary residual too large");
  return total.real();
}

Eigen::MatrixXd reconstruct(const PauliDecomposition& d) {
  const std::uint64_t dim = 1ull << d.n_qubits;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const PauliTerm& term : d.terms) {
    const StringMasks masks = masks_for_letters(term.letters);
    for (std::uint64_t r = 0; r < dim; ++r)
      m(r, r ^ masks.flip) += term.coefficient * entry_sign(masks, r);
  }
  return m;
}

}  // namespace logq
