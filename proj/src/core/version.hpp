#pragma once

namespace lsp {

inline constexpr const char* kArtifactName = "laplace-spectra";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace lsp
