#pragma once

#include <string>
#include <vector>

namespace homint {

/// One failed identity instance: where it happened and the mismatch.
struct Violation {
    std::string identity;
    std::string where;
};

/// Aggregated check outcome. Violations are data, not errors; only the
/// first `keep` offenders are stored verbatim plus a total count.
class Report {
public:
    explicit Report(size_t keep = 10) : keep_(keep) {}

    void add(std::string identity, std::string where) {
        ++total_;
        if (sample_.size() < keep_) sample_.push_back({std::move(identity), std::move(where)});
    }
    void merge(const Report& o) {
        total_ += o.total_;
        for (const auto& v : o.sample_)
            if (sample_.size() < keep_) sample_.push_back(v);
    }

    bool clean() const { return total_ == 0; }
    size_t total() const { return total_; }
    const std::vector<Violation>& sample() const { return sample_; }

    std::string summary() const {
        if (clean()) return "ok";
        std::string s = std::to_string(total_) + " violation(s)";
        for (const auto& v : sample_) s += "\n  " + v.identity + " at " + v.where;
        return s;
    }

private:
    size_t keep_;
    size_t total_ = 0;
    std::vector<Violation> sample_;
};

}  // namespace homint
