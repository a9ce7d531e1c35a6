#ifndef APERY_VERSION_HPP
#define APERY_VERSION_HPP

#define APERY_VERSION "1.0.0"

#endif
