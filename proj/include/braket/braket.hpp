#pragma once

#include "braket/clebsch_gordan.hpp"
#include "braket/cli.hpp"
#include "braket/cvs.hpp"
#include "braket/dsl.hpp"
#include "braket/errors.hpp"
#include "braket/numkernel.hpp"
#include "braket/opalg.hpp"
#include "braket/projections.hpp"
#include "braket/repsl2c.hpp"
#include "braket/serialize.hpp"
#include "braket/transforms.hpp"
