#include "fhn/model.hpp"

// Header-only for now; the translation unit anchors the library target.
namespace fhn {}
