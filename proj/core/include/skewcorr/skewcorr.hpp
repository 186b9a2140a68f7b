#pragma once

#include "skewcorr/channels.hpp"
#include "skewcorr/error.hpp"
#include "skewcorr/linalg.hpp"
#include "skewcorr/measures.hpp"
#include "skewcorr/oracle.hpp"
#include "skewcorr/state.hpp"
