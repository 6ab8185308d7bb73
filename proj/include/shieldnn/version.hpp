#pragma once

namespace shieldnn {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr const char* kConfigSchema = "shieldnn-config/1";
inline constexpr const char* kCertificateSchema = "shieldnn-cert/1";
inline constexpr const char* kFilterSchema = "shieldnn-filter/1";
inline constexpr const char* kCampaignSchema = "shieldnn-campaign/1";

}  // namespace shieldnn
