#include "tmw/couplers.hpp"
