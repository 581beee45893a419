#pragma once

#include <string>

#include <json.hpp>

#include "binform/dynamics.hpp"
#include "binform/error.hpp"
#include "binform/hamfield.hpp"
#include "binform/realfactor.hpp"
#include "binform/symgroup.hpp"
#include "binform/verdict.hpp"

namespace binform {

using Json = nlohmann::json;

Json to_json(const Mat2d& m);
Json to_json(const FactorizationStructure& fs);
Json to_json(const SymmetryGroup& g);
Json to_json(const TheoremVerdict& v);
Json to_json(const PartitionDescription& pd);
Json to_json(const Trajectory& tr);
Json to_json(const Portrait& p);
Json to_json(const Error& e);

/// {F, D, hFld, deg_hFld} with components as canonical text.
Json hamiltonian_json(const HomogeneousForm& f);

std::string portrait_svg(const Portrait& p);
/// Rows (kind, id, t_or_level, x, y).
std::string portrait_csv(const Portrait& p);

}  // namespace binform
