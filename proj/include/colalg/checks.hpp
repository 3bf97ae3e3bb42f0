#pragma once

#include "colalg/checks/cross.hpp"
#include "colalg/checks/report.hpp"
#include "colalg/checks/sampler.hpp"
#include "colalg/checks/suites.hpp"
