from hypothesis import settings

# law tables and exhaustive subset loops can blow the default 200ms deadline
# on a loaded machine; the suite bounds total runtime instead
settings.register_profile("conseq", deadline=None)
settings.load_profile("conseq")
