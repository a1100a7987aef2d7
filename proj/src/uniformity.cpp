#include "gfdiff/uniformity.hpp"

#include <algorithm>
#include <thread>

namespace gfdiff {

namespace {

void guard(const Field& F, unsigned max_n, bool allow_large, const char* flag) {
  if (F.n() > max_n && !allow_large) {
    fail(ErrorCode::Resource, "GF(2^" + std::to_string(F.n()) + ") exceeds the default limit n <= " + std::to_string(max_n) +
                                  "; pass " + flag + " to override");
  }
}

template <typename Counter>
void tally(const Poly& D, std::vector<Counter>& hist) {
  const Field& F = D.field();
  for (std::uint64_t v = 0; v < F.size(); ++v) ++hist[D.eval(Elem(static_cast<std::uint32_t>(v))).bits];
}

template <typename Counter>
void collect(const std::vector<Counter>& hist, SpectrumRow& row) {
  for (std::size_t beta = 0; beta < hist.size(); ++beta) {
    const std::uint64_t c = hist[beta];
    if (c == 0) continue;
    const Elem b(static_cast<std::uint32_t>(beta));
    row.counts.emplace_back(b, c);
    row.delta_alpha = std::max(row.delta_alpha, c);
    if (row.d_degree > 0 && c == static_cast<std::uint64_t>(row.d_degree)) row.split_betas.push_back(b);
  }
}

std::vector<std::uint32_t> value_table(const Poly& f) {
  const Field& F = f.field();
  std::vector<std::uint32_t> t(F.size());
  for (std::uint64_t v = 0; v < F.size(); ++v) t[v] = f.eval(Elem(static_cast<std::uint32_t>(v))).bits;
  return t;
}

// Better candidate under the deterministic order: larger delta, then smaller
// alpha, then smaller beta.
bool better(const DeltaResult& a, const DeltaResult& b) {
  if (a.delta != b.delta) return a.delta > b.delta;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

}  // namespace

SpectrumRow ddt_row(const Poly& f, Elem alpha, bool allow_large) {
  const Field& F = f.field();
  guard(F, kRowGuardMaxN, allow_large, "--allow-large");
  const Poly D = d_alpha(f, alpha);
  SpectrumRow row{alpha, D.degree()};
  if (D.degree() <= 0) {
    row.counts.emplace_back(D.coeff(0), F.size());
    row.delta_alpha = F.size();
    return row;
  }
  // A nonzero D - beta has at most deg D roots, so small degrees fit in bytes.
  if (D.degree() < 256) {
    std::vector<std::uint8_t> hist(F.size(), 0);
    tally(D, hist);
    collect(hist, row);
  } else {
    std::vector<std::uint32_t> hist(F.size(), 0);
    tally(D, hist);
    collect(hist, row);
  }
  return row;
}

DeltaResult delta_full(const Poly& f, bool allow_large, unsigned threads) {
  const Field& F = f.field();
  guard(F, kFullGuardMaxN, allow_large, "--allow-large");
  const std::vector<std::uint32_t> table = value_table(f);
  const std::uint64_t q = F.size();
  if (q < 2) return {};

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, q - 1));

  std::vector<DeltaResult> best(threads);
  auto worker = [&](unsigned w) {
    std::vector<std::uint32_t> hist(q);
    DeltaResult local{};
    // Interleaved alphas balance the load; the reduction below restores order.
    for (std::uint64_t a = 1 + w; a < q; a += threads) {
      std::fill(hist.begin(), hist.end(), 0u);
      for (std::uint64_t x = 0; x < q; ++x) ++hist[table[x] ^ table[x ^ a]];
      DeltaResult row{0, Elem(static_cast<std::uint32_t>(a)), Elem()};
      for (std::uint64_t b = 0; b < q; ++b) {
        if (hist[b] > row.delta) {
          row.delta = hist[b];
          row.beta = Elem(static_cast<std::uint32_t>(b));
        }
      }
      if (local.delta == 0 || better(row, local)) local = row;
    }
    best[w] = local;
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();

  DeltaResult out = best[0];
  for (const auto& r : best) {
    if (r.delta != 0 && better(r, out)) out = r;
  }
  return out;
}

std::uint64_t count_preimages(const Poly& f, Elem alpha, Elem beta) {
  const Field& F = f.field();
  std::uint64_t n = 0;
  for (std::uint64_t v = 0; v < F.size(); ++v) {
    const Elem x(static_cast<std::uint32_t>(v));
    if (f.eval(x + alpha) + f.eval(x) == beta) ++n;
  }
  return n;
}

void write_spectrum_csv(std::ostream& out, const Field& field, const std::vector<SpectrumRow>& rows) {
  out << "alpha_hex,beta_hex,count\n";
  for (const auto& row : rows) {
    for (const auto& [beta, count] : row.counts) {
      out << field.to_hex(row.alpha) << ',' << field.to_hex(beta) << ',' << count << '\n';
    }
  }
}

void write_ddt_csv(std::ostream& out, const Poly& f, bool allow_large) {
  const Field& F = f.field();
  guard(F, kFullGuardMaxN, allow_large, "--allow-large");
  const std::vector<std::uint32_t> table = value_table(f);
  std::vector<std::uint32_t> hist(F.size());
  out << "alpha_hex,beta_hex,count\n";
  for (std::uint64_t a = 1; a < F.size(); ++a) {
    std::fill(hist.begin(), hist.end(), 0u);
    for (std::uint64_t x = 0; x < F.size(); ++x) ++hist[table[x] ^ table[x ^ a]];
    for (std::uint64_t b = 0; b < F.size(); ++b) {
      if (hist[b] == 0) continue;
      out << F.to_hex(Elem(static_cast<std::uint32_t>(a))) << ',' << F.to_hex(Elem(static_cast<std::uint32_t>(b))) << ','
          << hist[b] << '\n';
    }
  }
}

}  // namespace gfdiff
