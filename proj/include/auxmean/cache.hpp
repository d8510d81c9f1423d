#pragma once

#include <atomic>
#include <complex>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "auxmean/aux_eval.hpp"

namespace auxmean {

struct CacheRecord {
    double sigma = 0.0;
    double t = 0.0;
    AuxMethod method = AuxMethod::DirectContour;
    double tolerance = 0.0;
    double value_re = 0.0;
    double value_im = 0.0;
    double error_bound = 0.0;
};

// Append-only store of expensive evaluations keyed by (sigma, t, method,
// tolerance). Keys compare by exact binary64 value. Loading a file in which a
// key repeats with a different value, or inserting such a key, throws
// CacheIntegrityError. New records are buffered and written by flush(), sorted
// by key, so the file contents do not depend on evaluation order.
class EvalCache {
public:
    EvalCache() = default;
    explicit EvalCache(std::filesystem::path file);

    EvalCache(const EvalCache&) = delete;
    EvalCache& operator=(const EvalCache&) = delete;

    std::optional<CacheRecord> lookup(double sigma, double t, AuxMethod method, double tolerance) const;
    void insert(const CacheRecord& record);
    void flush();

    std::size_t size() const;
    std::size_t pending() const;
    long hits() const noexcept { return hits_.load(); }
    long misses() const noexcept { return misses_.load(); }

    static std::string format_record(const CacheRecord& r);
    static CacheRecord parse_record(const std::string& line);

private:
    using Key = std::tuple<double, double, int, double>;
    static Key key_of(const CacheRecord& r);
    void insert_locked(const CacheRecord& record, bool from_file);

    std::optional<std::filesystem::path> file_;
    mutable std::mutex mutex_;
    std::map<Key, CacheRecord> records_;
    std::vector<Key> pending_;
    mutable std::atomic<long> hits_{0};
    mutable std::atomic<long> misses_{0};
};

}  // namespace auxmean
