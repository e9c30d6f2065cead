#include "gmq.h"

#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <stdexcept>
#include <string>

#include "core/assembly.hpp"
#include "core/cube_rules.hpp"
#include "core/gauss_hermite.hpp"
#include "core/hermite.hpp"
#include "core/io_error.hpp"
#include "core/ou_kernel.hpp"
#include "core/rule.hpp"
#include "core/wce.hpp"

struct gmq_rule {
    gmq::QuadratureRule impl;
};

namespace {

thread_local std::string t_last_error;

gmq_status fail(gmq_status status, const char* what) {
    t_last_error = what ? what : "";
    return status;
}

template <class Fn>
gmq_status guarded(Fn&& fn) {
    try {
        fn();
        return GMQ_OK;
    } catch (const gmq::io_error& e) {
        return fail(GMQ_ERR_IO, e.what());
    } catch (const std::domain_error& e) {
        return fail(GMQ_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GMQ_ERR_INVALID, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(GMQ_ERR_NOMEM, e.what());
    } catch (const std::runtime_error& e) {
        return fail(GMQ_ERR_EVAL, e.what());
    } catch (const std::exception& e) {
        return fail(GMQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(GMQ_ERR_INTERNAL, "unknown error");
    }
}

gmq::KernelQuadratureConfig to_core(const gmq_kernel_cfg* cfg) {
    gmq::KernelQuadratureConfig out;
    if (cfg) {
        out.t_split = cfg->t_split;
        out.near_steps = cfg->near_steps;
        out.tail_steps = cfg->tail_steps;
        out.tail_cutoff = cfg->tail_cutoff;
    }
    return out;
}

gmq_status require(bool ok, const char* what) {
    return ok ? GMQ_OK : fail(GMQ_ERR_INVALID, what);
}

}  // namespace

extern "C" {

const char* gmq_status_str(gmq_status status) {
    switch (status) {
        case GMQ_OK: return "ok";
        case GMQ_ERR_DOMAIN: return "domain error";
        case GMQ_ERR_INVALID: return "invalid argument";
        case GMQ_ERR_EVAL: return "evaluation error";
        case GMQ_ERR_IO: return "i/o error";
        case GMQ_ERR_NOMEM: return "out of memory";
        case GMQ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gmq_last_error(void) { return t_last_error.c_str(); }

gmq_status gmq_hermite_eval(double x, int max_degree, double* out) {
    if (gmq_status s = require(out != nullptr, "gmq_hermite_eval: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] {
        const auto values = gmq::hermite_eval(x, max_degree);
        std::memcpy(out, values.data(), values.size() * sizeof(double));
    });
}

gmq_status gmq_gaussian_density(int dim, const double* x, double* out) {
    if (gmq_status s = require(x && out, "gmq_gaussian_density: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] {
        const gmq::GaussianDensityContext ctx{dim};
        *out = gmq::gaussian_density(ctx, std::span<const double>(x, dim > 0 ? dim : 0));
    });
}

gmq_status gmq_gauss_hermite(int n, double* nodes, double* weights) {
    if (gmq_status s = require(nodes && weights, "gmq_gauss_hermite: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] {
        const gmq::GaussHermiteRule rule = gmq::gauss_hermite(n);
        std::memcpy(nodes, rule.nodes.data(), rule.nodes.size() * sizeof(double));
        std::memcpy(weights, rule.weights.data(), rule.weights.size() * sizeof(double));
    });
}

void gmq_kernel_cfg_default(gmq_kernel_cfg* cfg) {
    if (!cfg) return;
    const gmq::KernelQuadratureConfig defaults;
    cfg->t_split = defaults.t_split;
    cfg->near_steps = defaults.near_steps;
    cfg->tail_steps = defaults.tail_steps;
    cfg->tail_cutoff = defaults.tail_cutoff;
}

gmq_status gmq_mehler(double t, double x, double y, double* out) {
    if (gmq_status s = require(out != nullptr, "gmq_mehler: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = gmq::mehler(t, x, y); });
}

gmq_status gmq_k_sigma(double sigma, double x, double y, const gmq_kernel_cfg* cfg,
                       double* out) {
    if (gmq_status s = require(out != nullptr, "gmq_k_sigma: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = gmq::k_sigma(sigma, x, y, to_core(cfg)); });
}

gmq_status gmq_semigroup_project(double t, int k, double x, double* out) {
    if (gmq_status s = require(out != nullptr, "gmq_semigroup_project: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = gmq::semigroup_project(t, k, x); });
}

double gmq_psi(double x) { return gmq::psi(x); }

double gmq_psi_prime(double x) { return gmq::psi_prime(x); }

gmq_status gmq_rule_midpoint(int64_t m, gmq_rule** out) {
    if (gmq_status s = require(out != nullptr, "gmq_rule_midpoint: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = new gmq_rule{gmq::midpoint_rule(m)}; });
}

gmq_status gmq_rule_fibonacci(int index, gmq_rule** out) {
    if (gmq_status s = require(out != nullptr, "gmq_rule_fibonacci: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = new gmq_rule{gmq::fibonacci_rule(index)}; });
}

gmq_status gmq_rule_transform_psi(const gmq_rule* rule, gmq_rule** out) {
    if (gmq_status s = require(rule && out, "gmq_rule_transform_psi: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] {
        *out = new gmq_rule{gmq::transform_rule_coordinatewise(rule->impl)};
    });
}

void gmq_assembly_params_default(gmq_assembly_params* params) {
    if (!params) return;
    const gmq::AssemblyParams defaults;
    params->dim = defaults.dimension;
    params->a = defaults.a;
    params->delta = defaults.delta;
    params->n_budget = defaults.n_budget;
    params->varrho_tol = defaults.varrho_tol;
}

gmq_status gmq_varrho(double delta, double a, int dim, double tol, double* out) {
    if (gmq_status s = require(out != nullptr, "gmq_varrho: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = gmq::varrho(delta, a, dim, tol); });
}

gmq_status gmq_xi(int64_t n, double delta, double a, double* out) {
    if (gmq_status s = require(out != nullptr, "gmq_xi: out is null"); s != GMQ_OK)
        return s;
    return guarded([&] { *out = gmq::xi(n, delta, a); });
}

gmq_status gmq_rule_assemble(const gmq_assembly_params* params, gmq_base_kind base,
                             int apply_psi, gmq_rule** out) {
    if (gmq_status s = require(params && out, "gmq_rule_assemble: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] {
        gmq::AssemblyParams core;
        core.dimension = params->dim;
        core.a = params->a;
        core.delta = params->delta;
        core.n_budget = params->n_budget;
        core.varrho_tol = params->varrho_tol;

        const gmq::CubeRuleKind kind = base == GMQ_BASE_MIDPOINT
                                           ? gmq::CubeRuleKind::Midpoint1D
                                           : gmq::CubeRuleKind::Fibonacci2D;
        if (core.dimension != gmq::cube_rule_dimension(kind))
            throw std::domain_error("gmq_rule_assemble: base kind does not match dim");
        *out = new gmq_rule{
            gmq::assemble(gmq::make_base_factory(kind, apply_psi != 0), core)};
    });
}

void gmq_rule_free(gmq_rule* rule) { delete rule; }

int gmq_rule_dim(const gmq_rule* rule) { return rule ? rule->impl.dimension : 0; }

int64_t gmq_rule_size(const gmq_rule* rule) {
    return rule ? static_cast<int64_t>(rule->impl.count()) : 0;
}

gmq_status gmq_rule_node(const gmq_rule* rule, int64_t i, double* coords, double* weight) {
    if (gmq_status s = require(rule != nullptr, "gmq_rule_node: rule is null"); s != GMQ_OK)
        return s;
    if (i < 0 || i >= static_cast<int64_t>(rule->impl.count()))
        return fail(GMQ_ERR_INVALID, "gmq_rule_node: index out of range");
    const auto node = rule->impl.node(static_cast<std::size_t>(i));
    if (coords) std::memcpy(coords, node.data(), node.size() * sizeof(double));
    if (weight) *weight = rule->impl.weights[static_cast<std::size_t>(i)];
    return GMQ_OK;
}

double gmq_rule_weight_sum(const gmq_rule* rule) {
    return rule ? rule->impl.weight_sum() : 0.0;
}

gmq_status gmq_rule_write_csv(const gmq_rule* rule, const char* path) {
    if (gmq_status s = require(rule && path, "gmq_rule_write_csv: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] { gmq::write_rule_csv(rule->impl, path); });
}

gmq_status gmq_integrate(const gmq_rule* rule, gmq_integrand f, void* user, double* out) {
    if (gmq_status s = require(rule && f && out, "gmq_integrate: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] {
        *out = gmq::integrate(rule->impl, [&](std::span<const double> x) {
            return f(x.data(), rule->impl.dimension, user);
        });
    });
}

gmq_status gmq_wce_1d(const gmq_rule* rule, double s, int64_t m, double* out) {
    if (gmq_status st = require(rule && out, "gmq_wce_1d: null pointer"); st != GMQ_OK)
        return st;
    return guarded([&] { *out = gmq::wce_1d(rule->impl, s, m); });
}

gmq_status gmq_wce_md(const gmq_rule* rule, double s, int64_t cap, double* out) {
    if (gmq_status st = require(rule && out, "gmq_wce_md: null pointer"); st != GMQ_OK)
        return st;
    return guarded([&] { *out = gmq::wce_md(rule->impl, s, cap); });
}

gmq_status gmq_rate_fit(const int64_t* n, const double* err, int count, double* slope) {
    if (gmq_status s = require(n && err && slope, "gmq_rate_fit: null pointer"); s != GMQ_OK)
        return s;
    return guarded([&] {
        std::vector<std::pair<std::int64_t, double>> samples;
        samples.reserve(count > 0 ? count : 0);
        for (int i = 0; i < count; ++i) samples.emplace_back(n[i], err[i]);
        *slope = gmq::rate_fit(samples);
    });
}

}  // extern "C"
