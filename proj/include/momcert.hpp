#pragma once

#include "momcert/machine.hpp"
#include "momcert/jet.hpp"
#include "momcert/scalar.hpp"
#include "momcert/geometry.hpp"
#include "momcert/bounds.hpp"
#include "momcert/cases.hpp"
#include "momcert/certifier.hpp"
#include "momcert/section4.hpp"
#include "momcert/fillings.hpp"
#include "momcert/report.hpp"
