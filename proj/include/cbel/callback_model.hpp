#pragma once

// Sequential-attempt (callback) response model.
//
// A unit with outcome y is contacted up to m times; the probability of
// responding at attempt k, given no response before k, is
//   pi(y; alpha_k, beta) = logistic(alpha_k + beta' r(y)).
// The intercept varies by attempt, the slope is shared across attempts.
// Path probabilities rho_k and the overall response probability rho
// follow by chaining the per-attempt Bernoullis.

#include <vector>

#include "cbel/data_model.hpp"

namespace cbel {

// logistic(alpha_k + beta' r(y)), in (0,1).
double attempt_prob(double y, double alpha_k, const Eigen::VectorXd& beta,
                    const BasisSpec& r_basis);

// rho_k(y; phi): probability of responding exactly at attempt k (1<=k<=m).
double response_path_prob(double y, int k, const ResponseParams& phi,
                          const BasisSpec& r_basis);

// rho(y; phi) = 1 - prod_k {1 - pi_k(y)} = sum_k rho_k(y; phi).
double overall_response_prob(double y, const ResponseParams& phi, const BasisSpec& r_basis);

// log{1 - rho(y; phi)} = -sum_k softplus(alpha_k + beta' r(y)), exact in
// log space; the quantity the likelihood actually needs.
double log_nonresponse_prob(double y, const ResponseParams& phi, const BasisSpec& r_basis);

// One Bernoulli observation of the person-attempt expansion. Maximizing
// the weighted logistic log-likelihood over these records, separately per
// parameter group, is algebraically the response-model M-step objective.
struct AttemptRecord {
    double y = 0.0;
    int attempt = 1;          // 1..m
    int responded = 0;        // 0/1
    double weight = 1.0;      // >= 0
    int group_of_params = 0;  // which phi the record informs
    double r_features[2] = {0.0, 0.0};  // cached r(y), dim <= 2
};

// Expands a dataset into attempt records:
//  - each respondent with D = k contributes its observed path: failures at
//    attempts 1..k-1 and a success at k, weight 1, under its own group's
//    parameters;
//  - each respondent (of either group) contributes m weighted failure
//    records per parameter group g, with weight w (g = 0) or v (g = 1),
//    standing in for the nonrespondents attributed to its support point.
// Zero-weight records are dropped. w and v are indexed over the pooled
// respondent support (respondent_indices order).
std::vector<AttemptRecord> expand_person_attempts(const CallbackDataset& dataset,
                                                  const std::vector<double>& w,
                                                  const std::vector<double>& v);

}  // namespace cbel
