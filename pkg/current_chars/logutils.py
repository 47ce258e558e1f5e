import logging


class ContextualLoggerAdapter(logging.LoggerAdapter):
    """
    A simple Logger wrapper for conveniently adding extra context
    to messages.

    It will prepend messages with the 'context' string provided
    in the 'extra' dictionary, for example::

        logger = logging.getLogger(__name__)
        ctxlog = ContextualLoggerAdapter(
            logger,
            {'context': 'Oracle[A1 dim=2 m=3]'},
        )
        ctxlog.info('coinvariant ring built')

    The resulting log message would be
    ``'Oracle[A1 dim=2 m=3]: coinvariant ring built'``.
    """
    def process(self, msg, kwargs):
        ctx = self.extra['context']
        return f'{ctx}: {msg}', kwargs


def contextual_logger(logger: logging.Logger, context: str):
    """ Shortcut used by the oracle and the verification runner. """
    return ContextualLoggerAdapter(logger, {'context': context})
