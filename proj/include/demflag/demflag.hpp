#pragma once

#include "demflag/crystal.hpp"
#include "demflag/flags.hpp"
