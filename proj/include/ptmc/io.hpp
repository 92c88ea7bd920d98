#ifndef PTMC_IO_HPP
#define PTMC_IO_HPP

#include <optional>
#include <string>

#include "ptmc/constructions.hpp"
#include "ptmc/cover_search.hpp"
#include "ptmc/lattice_codes.hpp"

namespace ptmc {

/// A code file: {ambient:{kind, moduli|bounds}, vertices:[[ints]],
/// kappa:{class_key_hash:t}} with an optional "template" block
/// {fr_volume, shapes:[{name, cells, radius, multiplicity}]} whose torus is
/// the ambient.
struct CodeDocument {
  CodeSet code;
  KappaAssignment kappa;
  std::optional<TemplateSpec> templ;
};

/// Vertices in lexicographic order, kappa expanded to every class of the code
/// and keyed by hash in ascending order; identical codes give identical text.
std::string write_code_json(const CodeSet &S, const KappaAssignment &kappa, const TemplateSpec *templ = nullptr);
/// Throws std::invalid_argument on schema violations.
CodeDocument read_code_json(const std::string &text);

/// {universe:[names], tiles:[{id, cells:[ints]}]}
std::string write_instance_json(const ExactCoverInstance &inst);
ExactCoverInstance read_instance_json(const std::string &text);

/// {kind, tiles:[ids], nodes}
std::string write_outcome_json(const ExactCoverInstance &inst, const CoverOutcome &outcome);
/// {count, exhaustive, timed_out, solutions:[[ids]], nodes}
std::string write_enumeration_json(const ExactCoverInstance &inst, const Enumeration &e);

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

} // namespace ptmc

#endif // PTMC_IO_HPP
