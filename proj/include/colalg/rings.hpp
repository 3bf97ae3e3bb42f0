#pragma once

#include "colalg/rings/concepts.hpp"
#include "colalg/rings/modular.hpp"
#include "colalg/rings/polynomial.hpp"
#include "colalg/rings/rational.hpp"
#include "colalg/rings/ring_spec.hpp"
