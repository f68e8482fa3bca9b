#pragma once

#include "conelab/cone.hpp"
#include "conelab/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

struct NamedGen {
    std::string name;
    std::string role;  // "automorphism" | "birational"
    LatMat mat;
};

struct FormData {
    int n = 0;               // manifold dimension, coeff m pairs x1^m x2^(n-m)
    std::string basis;       // "nef" | "eigen"
    std::map<int, QF> coeffs;
};

struct Cn1Data {
    std::string basis;
    QF phi1, phi2;
};

struct ActionScenario {
    long d = 0;
    std::optional<int> dimension;
    Cone2 nef;
    Cone2 mov;
    std::vector<NamedGen> gens;

    std::optional<FormData> form;
    std::optional<Cn1Data> cn1;
    std::optional<bool> c2_positive;

    std::vector<LatMat> aut_gens() const;
    std::vector<LatMat> bir_gens() const;
};

ActionScenario parse_scenario(const std::string& text);
ActionScenario load_scenario(const std::string& path);
std::string serialize_scenario(const ActionScenario& s);

enum class Severity { INFO, ERROR };

struct Finding {
    Severity severity;
    std::string rule;
    std::string message;
};

// Consistency rules; findings are data, never exceptions.
std::vector<Finding> validate_scenario(const ActionScenario& s);

bool has_errors(const std::vector<Finding>& findings);
std::string findings_report(const std::vector<Finding>& findings);

struct validation_error : data_error {
    explicit validation_error(const std::string& msg) : data_error(msg) {}
};

// Throws validation_error when validation produced any ERROR finding.
void require_valid(const ActionScenario& s);

}  // namespace conelab
