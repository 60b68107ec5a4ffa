#include "si/core.hpp"

#include <cmath>

#include "si/errors.hpp"

namespace si::core {

bool is_si_task(TaskKind k) {
    return k == TaskKind::csi || k == TaskKind::wsi || k == TaskKind::dsi;
}

std::string task_kind_name(TaskKind k) {
    switch (k) {
        case TaskKind::csi: return "csi";
        case TaskKind::wsi: return "wsi";
        case TaskKind::dsi: return "dsi";
        case TaskKind::inpaint: return "inpaint";
        case TaskKind::pixel_shuffle: return "pixel_shuffle";
        case TaskKind::super_res: return "super_res";
        case TaskKind::intensity_shift: return "intensity_shift";
    }
    return "unknown";
}

TaskKind task_kind_from_name(const std::string& name) {
    for (TaskKind k :
         {TaskKind::csi, TaskKind::wsi, TaskKind::dsi, TaskKind::inpaint,
          TaskKind::pixel_shuffle, TaskKind::super_res,
          TaskKind::intensity_shift}) {
        if (task_kind_name(k) == name) return k;
    }
    throw ConfigError("unknown task kind: " + name);
}

ValidationResult validate_mixture_plan(const MixturePlan& plan) {
    ValidationResult r;
    if (plan.n_per_mixture < 1) r.fail("n_per_mixture < 1");
    if (plan.m_mixtures < 1) r.fail("m_mixtures < 1");
    if (plan.n_pool < plan.n_per_mixture) r.fail("n_pool < n_per_mixture");
    if (plan.target_index != 0) r.fail("target_index != 0");
    if (static_cast<int>(plan.weights.size()) != plan.m_mixtures) {
        r.fail("weights row count != m_mixtures");
        return r;
    }
    for (const auto& row : plan.weights) {
        if (static_cast<int>(row.size()) != plan.n_pool) {
            r.fail("weights column count != n_pool");
            return r;
        }
    }

    for (int m = 0; m < plan.m_mixtures; ++m) {
        const auto& row = plan.weights[static_cast<size_t>(m)];
        double sum = 0.0;
        int nonzero = 0;
        bool in_range = true;
        for (double wv : row) {
            sum += wv;
            if (wv != 0.0) ++nonzero;
            if (wv < 0.0 || wv > 1.0) in_range = false;
        }
        const std::string tag = "row " + std::to_string(m);
        if (!in_range) r.fail(tag + ": weight outside [0,1]");
        if (std::abs(sum - 1.0) > kRowSumTolerance) r.fail(tag + ": row sum != 1");
        if (nonzero != plan.n_per_mixture)
            r.fail(tag + ": nonzero count != n_per_mixture");
        if (plan.target_index >= 0 && plan.target_index < plan.n_pool &&
            row[static_cast<size_t>(plan.target_index)] == 0.0)
            r.fail(tag + ": target weight is zero");
    }

    // A non-target source may feed at most one mixture.
    for (int n = 0; n < plan.n_pool; ++n) {
        if (n == plan.target_index) continue;
        int uses = 0;
        for (int m = 0; m < plan.m_mixtures; ++m)
            if (plan.weight(m, n) != 0.0) ++uses;
        if (uses > 1)
            r.fail("source " + std::to_string(n) + " used in " +
                   std::to_string(uses) + " rows");
    }
    return r;
}

}  // namespace si::core
