#include <vwseries/hilb.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace vwseries {

namespace {

std::mutex memo_mutex;                      // guards both tables below
std::vector<long long> sigma_memo = {0};    // sigma(j), index 0 unused
std::map<long, std::vector<Int>> coeff_memo;  // eulS -> p_0..p_last

// Extends the divisor-sum table through index n (caller holds the lock).
void grow_sigma(std::size_t n) {
  const std::size_t old = sigma_memo.size();
  if (old > n) return;
  sigma_memo.resize(n + 1, 0);
  // redo the sieve over the full range; cost is trivial at our sizes
  for (std::size_t j = 1; j <= n; ++j) sigma_memo[j] = 0;
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t mult = d; mult <= n; mult += d) sigma_memo[mult] += static_cast<long long>(d);
}

}  // namespace

Int hilb_euler(long eulS, long m) {
  if (m < 0) return Int(0);
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto& tab = coeff_memo[eulS];
  if (tab.empty()) tab.emplace_back(1);  // Hilb^0 is a point
  if (static_cast<long>(tab.size()) <= m) {
    grow_sigma(static_cast<std::size_t>(m));
    for (long n = static_cast<long>(tab.size()); n <= m; ++n) {
      Int acc = 0;
      for (long j = 1; j <= n; ++j)
        acc += make_int(sigma_memo[static_cast<std::size_t>(j)]) * tab[static_cast<std::size_t>(n - j)];
      acc *= eulS;
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)))
        throw std::logic_error("hilb_euler: divisor-sum recurrence produced a non-integer");
      Int p;
      mpz_divexact_ui(p.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
      tab.push_back(p);
    }
  }
  return tab[static_cast<std::size_t>(m)];
}

QSeries hilb_series(long eulS, long N) {
  if (N < 0) throw std::invalid_argument("hilb_series: negative truncation");
  QSeries::TermMap t;
  for (long m = 0; m < N; ++m) {
    Int v = hilb_euler(eulS, m);
    if (v != 0) t.emplace(m, Rational(v));
  }
  return QSeries(1, N, std::move(t));
}

}  // namespace vwseries
