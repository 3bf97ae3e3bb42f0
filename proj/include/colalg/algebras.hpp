#pragma once

#include "colalg/algebras/common.hpp"
#include "colalg/algebras/generic.hpp"
#include "colalg/algebras/hermitian.hpp"
#include "colalg/algebras/split.hpp"
