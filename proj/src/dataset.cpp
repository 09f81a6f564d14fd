#include <algorithm>
#include <cmath>

#include "phishnet/data_io.hpp"
#include "phishnet/random.hpp"

namespace phishnet {

std::vector<WebsiteRecord> filter_stale(const std::vector<WebsiteRecord>& records, Timestamp now,
                                        double max_age_days) {
  if (!(max_age_days > 0.0)) throw ConfigError("max_age_days must be > 0");
  std::vector<WebsiteRecord> kept;
  for (const auto& r : records) {
    const double age_days = static_cast<double>((now - r.observed_at).count()) / 86400.0;
    if (age_days <= max_age_days) kept.push_back(r);
  }
  return kept;
}

DatasetSplit split_dataset(std::vector<nn::Example> examples, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train_fraction must lie in (0, 1)");
  }
  if (examples.size() < 2) throw ConfigError("splitting needs at least 2 examples");

  const auto n = static_cast<long long>(examples.size());
  const long long n_train =
      std::clamp(std::llround(train_fraction * static_cast<double>(n)), 1LL, n - 1);

  Rng rng(seed);
  fisher_yates_shuffle(examples, rng);

  DatasetSplit split;
  split.seed = seed;
  split.train_fraction = train_fraction;
  split.train.assign(std::make_move_iterator(examples.begin()),
                     std::make_move_iterator(examples.begin() + n_train));
  split.test.assign(std::make_move_iterator(examples.begin() + n_train),
                    std::make_move_iterator(examples.end()));
  return split;
}

}  // namespace phishnet
