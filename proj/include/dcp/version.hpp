#ifndef DCP_VERSION_HPP
#define DCP_VERSION_HPP

namespace dcp {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dcp

#endif
