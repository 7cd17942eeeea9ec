#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "polytc/verification.hpp"

namespace polytc {

/** Serializes a complex as {"n", "maximal_faces"} with 1-based vertex lists. */
[[nodiscard]] nlohmann::json complex_to_json(const SimplicialComplex& k);

/** Parses {"n", "maximal_faces"}; malformed input raises std::domain_error. */
[[nodiscard]] SimplicialComplex complex_from_json(const nlohmann::json& j);

/** Serializes a spec as {"n", "dims", "maximal_faces"} plus "name" when set. */
[[nodiscard]] nlohmann::json spec_to_json(const SphereProductSpec& spec);

/** Parses a spec document; malformed input raises std::domain_error. */
[[nodiscard]] Carrier spec_from_json(const nlohmann::json& j);

/** Serializes a norm value with its witness tuple of faces. */
[[nodiscard]] nlohmann::json witness_to_json(const NormWitness& w);

/** Serializes a tensor element as {"terms": [{"faces", "coef"}]} in term order. */
[[nodiscard]] nlohmann::json tensor_to_json(const TensorElement& t);

/** Serializes a certificate with its factor list, product, and anchor term. */
[[nodiscard]] nlohmann::json certificate_to_json(const Certificate& cert);

/** Serializes a configuration as {"columns"}: s columns of n coordinate rows. */
[[nodiscard]] nlohmann::json configuration_to_json(const Configuration& config);

/**
 * Parses {"columns"} against the spec: s columns, one point per vertex with
 * dim_of(v)+1 coordinates, each on its sphere.  Raises std::domain_error on
 * malformed input.
 */
[[nodiscard]] Configuration configuration_from_json(const Carrier& carrier,
                                                    const nlohmann::json& j,
                                                    double tol = 1e-9);

/** Serializes a stratum: row partitions, sign pattern, and pole data. */
[[nodiscard]] nlohmann::json stratum_to_json(const Stratum& st);

/** Serializes a verification report including every recorded failure. */
[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& rep);

/** Reads and parses a JSON file; I/O or parse problems raise std::domain_error. */
[[nodiscard]] nlohmann::json load_json_file(const std::string& path);

/**
 * Writes the motion plan as CSV: a header row, then grid+1 samples at
 * t = g/grid.  One column per path coordinate, named c{column}_r{row}_{axis}.
 */
void write_trace_csv(std::ostream& os, const PathPlan& plan, int grid);

}  // namespace polytc
