#pragma once

#include <string>

#include "actcheck/series.hpp"

namespace actcheck {

enum class ActivationKind { Expo, Sigmoid, Tanh, Relu };

const char* to_string(ActivationKind kind);
bool activation_from_string(const std::string& name, ActivationKind& out);

enum class Verdict { Pass, FaultDetected };

struct ProtectedResult {
    double value = 0.0;          // activation output y
    double checker_value = 0.0;  // independently derived quantity
    double residual = 0.0;       // checker distance; NaN forces detection
    Verdict verdict = Verdict::Pass;
    double epsilon_used = 0.0;

    bool detected() const { return verdict == Verdict::FaultDetected; }
};

// The series argument fed to maclaurin_terms for a given activation input.
// Sigmoid/Expo evaluate e^{+-x}; tanh evaluates e^{+-2x}, with the argument
// saturated to the series' convergence window.
double series_argument(ActivationKind kind, double x, const SeriesSettings& settings);

double expo_baseline(const SeriesContext& ctx);
double sigmoid_baseline(const SeriesContext& ctx);
double tanh_baseline(const SeriesContext& ctx2);
double relu_baseline(double x);

// Checks take the forward value explicitly so that attacked outputs can be
// fed through the same verdict logic.
ProtectedResult expo_check(double forward, const SeriesContext& ctx, double eps);
ProtectedResult sigmoid_check(double forward, const SeriesContext& ctx, double eps);
ProtectedResult tanh_check(double forward, const SeriesContext& ctx2, double eps);
ProtectedResult relu_protected(double x, double forward);

ProtectedResult expo_protected(const SeriesContext& ctx, double eps);
ProtectedResult sigmoid_protected(const SeriesContext& ctx, double eps);
ProtectedResult tanh_protected(const SeriesContext& ctx2, double eps);

}  // namespace actcheck
