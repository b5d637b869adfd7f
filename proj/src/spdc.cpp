#include "tmw/spdc.hpp"
