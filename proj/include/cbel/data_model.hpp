#pragma once

// Core domain types for two-sample callback data.
//
// A unit belongs to group 0 or 1 and carries a callback indicator
// d in {1, ..., m+1}: d = k means the unit responded at contact
// attempt k, d = m+1 means it never responded within the m attempts.
// The outcome y is observed exactly when d <= m.
//
// All types are immutable value types once constructed and safe to
// share across threads.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cbel {

struct CallbackUnit {
    int group = 0;                // 0 or 1, fixed design label
    int d = 1;                    // callback indicator, 1..m+1
    std::optional<double> y;      // outcome, present iff d <= m

    bool responded(int m) const { return d <= m; }
};

struct CallbackDataset {
    std::vector<CallbackUnit> units;
    int m = 2;

    int group_size(int g) const {
        int c = 0;
        for (const auto& u : units) c += (u.group == g);
        return c;
    }
    int respondent_count(int g) const {
        int c = 0;
        for (const auto& u : units) c += (u.group == g && u.d <= m);
        return c;
    }
    int total_size() const { return static_cast<int>(units.size()); }
    int total_respondents() const { return respondent_count(0) + respondent_count(1); }

    // Content hash used to refuse mixing fits from different datasets.
    std::uint64_t fingerprint() const;
};

// Basis functions for the response model r(y) and the density ratio
// exponent q(y). The candidate set is {y, log(y), (y, log(y))}.
enum class BasisKind { identity, log, identity_and_log };

struct BasisSpec {
    BasisKind kind = BasisKind::identity;

    int dimension() const { return kind == BasisKind::identity_and_log ? 2 : 1; }
    bool needs_positive() const { return kind != BasisKind::identity; }

    // Writes dimension() feature values for outcome y into out.
    void eval(double y, double* out) const {
        switch (kind) {
            case BasisKind::identity:
                out[0] = y;
                break;
            case BasisKind::log:
                check_domain(y);
                out[0] = std::log(y);
                break;
            case BasisKind::identity_and_log:
                check_domain(y);
                out[0] = y;
                out[1] = std::log(y);
                break;
        }
    }

    Eigen::VectorXd eval(double y) const {
        Eigen::VectorXd f(dimension());
        eval(y, f.data());
        return f;
    }

    std::string name() const {
        switch (kind) {
            case BasisKind::identity: return "y";
            case BasisKind::log: return "log(y)";
            case BasisKind::identity_and_log: return "(y,log(y))";
        }
        return "?";
    }

    static BasisSpec parse(const std::string& token);

  private:
    static void check_domain(double y) {
        if (!(y > 0.0)) {
            throw std::domain_error("log basis requires strictly positive outcomes, got y = " +
                                    std::to_string(y));
        }
    }
};

struct ModelSpec {
    BasisSpec r_basis;   // response-model basis
    BasisSpec q_basis;   // density-ratio basis
    int m = 2;
};

// Callback response model parameters for one group: per-attempt
// intercepts alpha_1..alpha_m and a slope vector shared across attempts.
struct ResponseParams {
    Eigen::VectorXd alphas;   // length m
    Eigen::VectorXd beta;     // length dim r(y)

    static ResponseParams zeros(int m, int r_dim) {
        ResponseParams p;
        p.alphas = Eigen::VectorXd::Zero(m);
        p.beta = Eigen::VectorXd::Zero(r_dim);
        return p;
    }

    // (alpha_1..alpha_m, beta) stacked; the layout used by the solvers.
    Eigen::VectorXd stacked() const {
        Eigen::VectorXd v(alphas.size() + beta.size());
        v << alphas, beta;
        return v;
    }
    static ResponseParams from_stacked(const Eigen::VectorXd& v, int m) {
        ResponseParams p;
        p.alphas = v.head(m);
        p.beta = v.tail(v.size() - m);
        return p;
    }
};

// Density ratio parameters: dF1 = exp(theta0 + theta1' q(y)) dF0.
struct DrmParams {
    double theta0 = 0.0;
    Eigen::VectorXd theta1;   // length dim q(y)

    static DrmParams zeros(int q_dim) {
        DrmParams t;
        t.theta1 = Eigen::VectorXd::Zero(q_dim);
        return t;
    }

    // (theta0, theta1) as one vector, matching Q(y) = (1, q(y)')'.
    Eigen::VectorXd full() const {
        Eigen::VectorXd v(1 + theta1.size());
        v(0) = theta0;
        v.tail(theta1.size()) = theta1;
        return v;
    }
    static DrmParams from_full(const Eigen::VectorXd& v) {
        DrmParams t;
        t.theta0 = v(0);
        t.theta1 = v.tail(v.size() - 1);
        return t;
    }
};

// Converged (or best-effort) state of one empirical-likelihood fit.
struct FittedModel {
    DrmParams theta;
    ResponseParams phi0, phi1;
    double eta0 = 0.0, eta1 = 0.0;
    std::vector<double> masses;       // p_ij on the pooled respondent support
    double log_el = 0.0;
    int iterations = 0;
    bool converged = false;

    bool null_restricted = false;     // theta frozen at zero
    std::vector<double> log_el_trace; // one entry per EM iteration
    std::vector<std::string> warnings;

    // Constraint residuals at the returned state.
    double c1_sum = 0.0;          // sum p - 1
    double c1_tilted_sum = 0.0;   // sum p exp(theta'Q) - 1
    double c2_eta0 = 0.0;         // sum p rho0 - eta0
    double c2_eta1 = 0.0;         // sum p exp(theta'Q) rho1 - eta1

    std::uint64_t data_fingerprint = 0;
};

// Outcome of a single hypothesis test, shared across all five methods.
struct TestResult {
    std::string method;
    double statistic = 0.0;        // reported statistic, >= 0
    double df = 0.0;               // 0 when the reference law has no df
    double p_value = 1.0;
    // Magnitude used for empirical-null calibration: larger = stronger
    // evidence against H0 (|t|, |z|, D, or the ELR statistic).
    double calibration_stat = 0.0;
    std::string diagnostics;
};

struct ValidationIssue {
    int unit_index = -1;   // -1 for dataset-level issues
    std::string message;
};

// Integrity checks; returns all violations (empty report = valid).
std::vector<ValidationIssue> validate_dataset(const CallbackDataset& dataset,
                                              const ModelSpec& spec);

// Indices of respondents as a stable partition: group-0 respondents in
// dataset order, then group-1 respondents in dataset order. This fixed
// ordering defines the pooled support used everywhere downstream.
std::vector<int> respondent_indices(const CallbackDataset& dataset);

}  // namespace cbel
