#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqed {

/// One bound level of the multilevel system. Energies are in natural units
/// (same units as the transition angular frequencies they generate).
struct Level {
  std::string id;
  double energy = 0.0;
};

/// One matrix element of the dipole operator between two levels,
/// as a complex 3-vector in Cartesian components (x, y, z).
/// Only one direction per unordered pair needs to be stored; the reverse
/// element is implied by complex conjugation.
struct DipoleElement {
  std::string from;
  std::string to;
  std::array<std::complex<double>, 3> vector{};
};

/// Full description of the atom: levels, dipole couplings, and the level
/// the system is prepared in.
struct AtomSpec {
  std::string name;
  std::vector<Level> levels;
  std::vector<DipoleElement> dipoles;
  std::string initial_state;
};

/// A single transition out of a given level `b`:
///   omega > 0  : |b> -> |partner> emits energy (de-excitation),
///   omega < 0  : |b> -> |partner> absorbs energy (excitation).
/// `polarization` holds P_ij = Re(v_i conj(v_j)) for the dipole vector v
/// taken in the b -> partner direction; it is real, symmetric, and of
/// rank <= 2 by construction.
struct Transition {
  std::string partner;
  double omega = 0.0;
  std::array<std::array<double, 3>, 3> polarization{};
};

/// Raised on malformed atom files (bad JSON, unknown keys, wrong shapes).
class AtomParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural validation. Returns a list of human-readable problems
/// (empty means valid): duplicate level ids, non-finite energies,
/// missing initial state, self-coupling, references to unknown levels,
/// duplicate ordered pairs, and pairs stored in both directions whose
/// elements are not exact conjugates of one another.
std::vector<std::string> validate(const AtomSpec& spec);

/// Enumerates all transitions out of level `b`, sorted by partner id.
/// Transitions with an identically zero dipole vector are omitted.
/// Throws std::invalid_argument if `b` is not a level of `spec`.
std::vector<Transition> transitions_from(const AtomSpec& spec,
                                         const std::string& b);

/// Parses the strict JSON atom format:
/// {
///   "name": "...",
///   "levels": [{"id": "...", "energy": <number>}, ...],
///   "dipoles": [{"from": "...", "to": "...",
///                "re": [x,y,z], "im": [x,y,z]}, ...],
///   "initial_state": "..."
/// }
/// "im" may be omitted (defaults to zero). Unknown keys are rejected at
/// every level. Throws AtomParseError on any violation.
AtomSpec parse_atom_json(const std::string& text);

/// Reads and parses an atom file. Throws AtomParseError if the file
/// cannot be read or does not parse.
AtomSpec load_atom_file(const std::string& path);

}  // namespace bqed
