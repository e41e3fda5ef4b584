#include "clucmp/evaluate.hpp"

#include <array>

namespace clucmp {

namespace {

constexpr std::array<const char*, 9> kKnownIds = {
    "rand", "vandongen", "accuracy", "nmi", "v", "k", "sh", "smse", "mi"};

}  // namespace

bool is_known_measure_id(const std::string& id) {
    for (const char* known : kKnownIds) {
        if (id == known) {
            return true;
        }
    }
    return false;
}

bool measure_requires_k(const std::string& id) { return id == "k"; }

bool measure_requires_features(const std::string& id) { return id == "smse"; }

MeasureScore evaluate_measure(const std::string& id, const Clustering& left,
                              const Clustering& right, std::optional<int> k,
                              const FeatureMatrix* features) {
    if (id == "rand") {
        return rand_index(left, right);
    }
    if (id == "vandongen") {
        return van_dongen(left, right);
    }
    if (id == "accuracy") {
        return accuracy(left, right);
    }
    if (id == "nmi") {
        return nmi(left, right);
    }
    if (id == "v") {
        return v_similarity(left, right);
    }
    if (id == "k") {
        if (!k.has_value()) {
            throw PreconditionError("measure 'k' needs a cluster bound k");
        }
        return k_measure(left, right, *k);
    }
    if (id == "sh") {
        return sh_measure(left, right);
    }
    if (id == "smse") {
        if (features == nullptr) {
            throw PreconditionError("measure 'smse' needs a feature matrix");
        }
        return smse_measure(left, right, *features);
    }
    if (id == "mi") {
        return {entropy_stats(left, right).mutual_info, "mi", false, {}};
    }
    throw InvalidInputError("unknown measure id '" + id + "'");
}

}  // namespace clucmp
