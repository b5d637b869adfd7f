#include "tmw/qpm.hpp"
