#pragma once

namespace nbspec {

/// Some OpenBLAS builds select a Cooperlake kernel that stalls in large
/// nonsymmetric eigensolves on this class of machine. When that kernel is
/// active and OPENBLAS_CORETYPE is unset, re-executes the current program
/// with OPENBLAS_CORETYPE=SkylakeX. Returns normally otherwise, including
/// when the re-exec fails. Call first thing in main().
void maybe_reexec_with_stable_blas(int argc, char** argv);

/// Name reported by the BLAS backend, or an empty string if unknown.
const char* blas_core_name();

}  // namespace nbspec
