class EjaException(Exception):
    ...
