# Laboratory packages
