#pragma once

namespace torsionlab {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

}  // namespace torsionlab
