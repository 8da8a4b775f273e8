from hypothesis import settings

settings.register_profile("kit", deadline=None)
settings.load_profile("kit")
