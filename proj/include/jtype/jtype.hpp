#pragma once

#include "jtype/classifier.hpp"
#include "jtype/component.hpp"
#include "jtype/errors.hpp"
#include "jtype/jordan_type.hpp"
#include "jtype/oracle.hpp"
#include "jtype/quiver.hpp"
