#include "tmw/circuits.hpp"
