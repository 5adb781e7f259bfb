from moyal.cli.commands.base import Command, CommandResult
from moyal.cli.commands.toolkit import CommandToolkit

__all__ = ["Command", "CommandResult", "CommandToolkit"]
