#include "cbel/data_model.hpp"

#include <cstring>

namespace cbel {

namespace {

// FNV-1a over raw bytes.
void hash_bytes(std::uint64_t& h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
}

void hash_u64(std::uint64_t& h, std::uint64_t v) { hash_bytes(h, &v, sizeof v); }

void hash_double(std::uint64_t& h, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    hash_u64(h, bits);
}

}  // namespace

std::uint64_t CallbackDataset::fingerprint() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    hash_u64(h, static_cast<std::uint64_t>(m));
    hash_u64(h, static_cast<std::uint64_t>(units.size()));
    for (const auto& u : units) {
        hash_u64(h, static_cast<std::uint64_t>(u.group));
        hash_u64(h, static_cast<std::uint64_t>(u.d));
        hash_double(h, u.y ? *u.y : std::numeric_limits<double>::quiet_NaN());
    }
    return h;
}

BasisSpec BasisSpec::parse(const std::string& token) {
    if (token == "y" || token == "identity") return {BasisKind::identity};
    if (token == "log" || token == "log(y)" || token == "logy") return {BasisKind::log};
    if (token == "y,log" || token == "y,log(y)" || token == "(y,log(y))" ||
        token == "y-log" || token == "identity-and-log") {
        return {BasisKind::identity_and_log};
    }
    throw std::invalid_argument("unknown basis '" + token + "' (expected y, log, or y,log)");
}

std::vector<ValidationIssue> validate_dataset(const CallbackDataset& dataset,
                                              const ModelSpec& spec) {
    std::vector<ValidationIssue> issues;
    auto add = [&issues](int idx, std::string msg) {
        issues.push_back({idx, std::move(msg)});
    };

    if (dataset.m < 2) add(-1, "m must be >= 2, got " + std::to_string(dataset.m));
    if (spec.m != dataset.m) {
        add(-1, "model spec m (" + std::to_string(spec.m) + ") does not match dataset m (" +
                    std::to_string(dataset.m) + ")");
    }

    const bool needs_positive = spec.r_basis.needs_positive() || spec.q_basis.needs_positive();

    for (int i = 0; i < dataset.total_size(); ++i) {
        const auto& u = dataset.units[static_cast<std::size_t>(i)];
        if (u.group != 0 && u.group != 1) {
            add(i, "group must be 0 or 1, got " + std::to_string(u.group));
        }
        if (u.d < 1 || u.d > dataset.m + 1) {
            add(i, "d out of range: " + std::to_string(u.d) + " not in 1.." +
                       std::to_string(dataset.m + 1));
        }
        const bool is_respondent = u.d >= 1 && u.d <= dataset.m;
        if (is_respondent && !u.y) {
            add(i, "missing outcome for respondent (d = " + std::to_string(u.d) + ")");
        }
        if (!is_respondent && u.y) {
            add(i, "outcome present for nonrespondent (d = " + std::to_string(u.d) + ")");
        }
        if (u.y && !std::isfinite(*u.y)) {
            add(i, "non-finite outcome");
        }
        if (u.y && needs_positive && !(*u.y > 0.0)) {
            add(i, "non-positive outcome under log basis");
        }
    }

    for (int g : {0, 1}) {
        if (dataset.group_size(g) < 1) {
            add(-1, "group " + std::to_string(g) + " is empty");
        } else if (dataset.respondent_count(g) < 1) {
            add(-1, "group " + std::to_string(g) + " has no respondents");
        }
    }
    return issues;
}

std::vector<int> respondent_indices(const CallbackDataset& dataset) {
    std::vector<int> idx;
    idx.reserve(dataset.units.size());
    for (int g : {0, 1}) {
        for (int i = 0; i < dataset.total_size(); ++i) {
            const auto& u = dataset.units[static_cast<std::size_t>(i)];
            if (u.group == g && u.d <= dataset.m) idx.push_back(i);
        }
    }
    return idx;
}

}  // namespace cbel
