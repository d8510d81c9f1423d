#include "auxmean/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "auxmean/csv.hpp"
#include "auxmean/errors.hpp"

namespace auxmean {
namespace {

constexpr const char* kCacheHeader = "# auxmean eval cache v1: sigma,t,method,tolerance,value_re,value_im,error_bound";

bool same_value(const CacheRecord& a, const CacheRecord& b) {
    return a.value_re == b.value_re && a.value_im == b.value_im && a.error_bound == b.error_bound;
}

}  // namespace

EvalCache::EvalCache(std::filesystem::path file) : file_(std::move(file)) {
    std::ifstream in(*file_);
    if (!in) {
        return;  // created on first flush
    }
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        CacheRecord r;
        try {
            r = parse_record(line);
        } catch (const Error& e) {
            throw CacheIntegrityError("cache " + file_->string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        insert_locked(r, true);
    }
}

EvalCache::Key EvalCache::key_of(const CacheRecord& r) {
    return {r.sigma, r.t, static_cast<int>(r.method), r.tolerance};
}

std::optional<CacheRecord> EvalCache::lookup(double sigma, double t, AuxMethod method, double tolerance) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = records_.find(Key{sigma, t, static_cast<int>(method), tolerance});
    if (it == records_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void EvalCache::insert(const CacheRecord& record) {
    std::lock_guard<std::mutex> lock(mutex_);
    insert_locked(record, false);
}

void EvalCache::insert_locked(const CacheRecord& record, bool from_file) {
    const Key key = key_of(record);
    const auto [it, inserted] = records_.emplace(key, record);
    if (!inserted) {
        if (!same_value(it->second, record)) {
            throw CacheIntegrityError("cache: conflicting values for sigma=" + format_double(record.sigma) +
                                      " t=" + format_double(record.t));
        }
        return;
    }
    if (!from_file) {
        pending_.push_back(key);
    }
}

void EvalCache::flush() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (pending_.empty() || !file_) {
        pending_.clear();
        return;
    }
    std::sort(pending_.begin(), pending_.end());
    const bool fresh = !std::filesystem::exists(*file_);
    std::ofstream out(*file_, std::ios::app);
    if (!out) {
        throw CacheIntegrityError("cache: cannot open " + file_->string() + " for appending");
    }
    if (fresh) {
        out << kCacheHeader << '\n';
    }
    for (const Key& key : pending_) {
        out << format_record(records_.at(key)) << '\n';
    }
    pending_.clear();
}

std::size_t EvalCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_.size();
}

std::size_t EvalCache::pending() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return pending_.size();
}

std::string EvalCache::format_record(const CacheRecord& r) {
    std::string out;
    out += format_double(r.sigma);
    out += ',';
    out += format_double(r.t);
    out += ',';
    out += method_name(r.method);
    out += ',';
    out += format_double(r.tolerance);
    out += ',';
    out += format_double(r.value_re);
    out += ',';
    out += format_double(r.value_im);
    out += ',';
    out += format_double(r.error_bound);
    return out;
}

CacheRecord EvalCache::parse_record(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (cells.size() != 7) {
        throw CacheIntegrityError("cache: malformed record '" + line + "'");
    }
    CacheRecord r;
    r.sigma = parse_double(cells[0]);
    r.t = parse_double(cells[1]);
    r.method = parse_method(cells[2]);
    r.tolerance = parse_double(cells[3]);
    r.value_re = parse_double(cells[4]);
    r.value_im = parse_double(cells[5]);
    r.error_bound = parse_double(cells[6]);
    return r;
}

}  // namespace auxmean
