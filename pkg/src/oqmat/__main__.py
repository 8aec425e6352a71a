from .qmcli import entry

entry()
