#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hooklab {

enum class Status { pass, fail, sampling_exhausted };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::sampling_exhausted: return "sampling_exhausted";
    }
    return "?";
}

/// Outcome of checking one identity on one instance.
struct InstanceResult {
    std::string identity;
    std::string instance;             // shape or parameter tuple, e.g. "3,2/1"
    Status status = Status::pass;
    std::string witness;              // set on failure
    std::vector<std::string> points;  // evaluation points used, if any
    int resamples = 0;
};

class Report {
public:
    Report() = default;
    explicit Report(std::string identity) : identity_(std::move(identity)) {}

    const std::string& identity() const noexcept { return identity_; }
    const std::vector<InstanceResult>& instances() const noexcept { return instances_; }

    void add(InstanceResult r) { instances_.push_back(std::move(r)); }

    InstanceResult& add(std::string instance)
    {
        instances_.push_back({identity_, std::move(instance), Status::pass, {}, {}, 0});
        return instances_.back();
    }

    /// Records a failure unless ok.
    InstanceResult& check(bool ok, std::string instance, std::string witness = {})
    {
        auto& r = add(std::move(instance));
        if (!ok) {
            r.status = Status::fail;
            r.witness = std::move(witness);
        }
        return r;
    }

    void merge(const Report& other)
    {
        instances_.insert(instances_.end(), other.instances_.begin(), other.instances_.end());
    }

    std::size_t count(Status s) const
    {
        std::size_t n = 0;
        for (const auto& r : instances_)
            n += r.status == s;
        return n;
    }

    bool ok() const { return count(Status::pass) == instances_.size(); }

    const InstanceResult* first_failure() const
    {
        for (const auto& r : instances_)
            if (r.status != Status::pass)
                return &r;
        return nullptr;
    }

    /// Throws identity_violated carrying the first witness.
    void require() const
    {
        for (const auto& r : instances_)
            if (r.status == Status::fail)
                throw identity_violated(r.identity + " fails at " + r.instance + ": " + r.witness);
    }

private:
    std::string identity_;
    std::vector<InstanceResult> instances_;
};

} // namespace hooklab
