#pragma once

#include <stdexcept>
#include <string>

namespace hypergrass {

/// Failure taxonomy. Every throwing operation documents which of these it can
/// raise; anything tagged `internal_error` indicates a broken invariant that
/// callers are never expected to handle.
enum class errc {
  parameter_mismatch,        ///< ill-formed or inconsistent arguments
  size_limit,                ///< configured enumeration/size cap exceeded
  no_circuit,                ///< permutation does not label a circuit for this k
  not_sorted,                ///< input collection violates pairwise sortedness
  not_maximal,               ///< collection is sorted but not of maximal size n
  not_adjacent,              ///< query subset is not a facet-detour replacement
  degenerate_query,          ///< query is trivially degenerate (e.g. W already a member)
  singular_incidence,        ///< incidence system of the scaling has no unique solution
  precision_failure,         ///< float-mode comparison within the error radius
  witness_search_exhausted,  ///< perturbation schedule hit its floor without success
  lemma_violation,           ///< a proved structural fact failed on concrete data
  not_applicable,            ///< hypothesis of the requested construction is unmet
  construction_failure,      ///< grid assembly failed a self-check
  inconsistent_poset,        ///< inference derived x < x
  verification_failure,      ///< a proved-scope experiment case failed
  internal_error,            ///< broken invariant; indicates a bug
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool ok, errc code, const std::string& message) {
  if (!ok) raise(code, message);
}

}  // namespace hypergrass
