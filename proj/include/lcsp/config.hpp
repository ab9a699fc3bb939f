#pragma once

// Structural self-checks (envelope tiling, run coverage) are on in debug
// builds. Define LCSP_DEBUG_CHECKS to 0 or 1 to override.
#if !defined(LCSP_DEBUG_CHECKS)
#if defined(NDEBUG)
#define LCSP_DEBUG_CHECKS 0
#else
#define LCSP_DEBUG_CHECKS 1
#endif
#endif
