#pragma once

namespace cyclojones {

// Serial reference loop or the OpenMP version of a kernel.
enum class Execution { serial, parallel };

}  // namespace cyclojones
