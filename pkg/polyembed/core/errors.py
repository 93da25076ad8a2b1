class PolyEmbedError(Exception):
    """
    Base class of every error raised by polyembed.

    Parameters
    ----------
    kind (str): Short name of the violated rule, e.g. 'SelfIntersecting'.
    detail (str): Human readable explanation naming the offending indices.
    """
    exit_code = 1

    def __init__(self, kind, detail=''):
        self.kind = kind
        self.detail = detail
        message = kind if not detail else '%s: %s' % (kind, detail)
        super(PolyEmbedError, self).__init__(message)


class InvalidInput(PolyEmbedError, ValueError):
    """
    Input rejected before any algorithm runs (bad polygon, bad point set,
    violated precondition such as convexity).
    """
    exit_code = 2


class SizeViolation(PolyEmbedError):
    """
    Requested size outside the proven range, or polygon above an oracle cap.
    """
    exit_code = 3


class NoCycle(PolyEmbedError):
    exit_code = 1

    def __init__(self, detail=''):
        super(NoCycle, self).__init__('NoCycle', detail)


class GenerationFailed(PolyEmbedError):
    exit_code = 2

    def __init__(self, detail=''):
        super(GenerationFailed, self).__init__('GenerationFailed', detail)


class IoFailure(PolyEmbedError):
    exit_code = 2

    def __init__(self, detail=''):
        super(IoFailure, self).__init__('IoFailure', detail)
